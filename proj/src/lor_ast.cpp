#include "seqcode/lor_ast.hpp"

#include <map>

namespace seqcode::lor {

namespace {
TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr mk(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace

TermPtr var(std::string name) { return mk(Term{TVar{std::move(name)}}); }
TermPtr zero() { return mk(Term{TZero{}}); }
TermPtr one() { return mk(Term{TOne{}}); }
TermPtr neg(TermPtr t) { return mk(Term{TNeg{std::move(t)}}); }
TermPtr add(TermPtr a, TermPtr b) {
  return mk(Term{TAdd{std::move(a), std::move(b)}});
}
TermPtr mul(TermPtr a, TermPtr b) {
  return mk(Term{TMul{std::move(a), std::move(b)}});
}

TermPtr numeral(unsigned long n) {
  if (n == 0) return zero();
  if (n == 1) return one();
  TermPtr two = add(one(), one());
  TermPtr half = numeral(n / 2);
  TermPtr even = mul(two, half);
  return (n % 2 == 0) ? even : add(even, one());
}

FormulaPtr eq(TermPtr a, TermPtr b) {
  return mk(Formula{FEq{std::move(a), std::move(b)}});
}
FormulaPtr lt(TermPtr a, TermPtr b) {
  return mk(Formula{FLt{std::move(a), std::move(b)}});
}
FormulaPtr leq(TermPtr a, TermPtr b) { return disj(lt(a, b), eq(a, b)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return mk(Formula{FAnd{std::move(a), std::move(b)}});
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return mk(Formula{FOr{std::move(a), std::move(b)}});
}
FormulaPtr imp(FormulaPtr a, FormulaPtr b) {
  return mk(Formula{FImp{std::move(a), std::move(b)}});
}
FormulaPtr lnot(FormulaPtr a) { return mk(Formula{FNot{std::move(a)}}); }
FormulaPtr exists(std::string v, FormulaPtr body) {
  return mk(Formula{FExists{std::move(v), std::move(body)}});
}
FormulaPtr forall(std::string v, FormulaPtr body) {
  return mk(Formula{FForall{std::move(v), std::move(body)}});
}
FormulaPtr exists_unique(std::string v, FormulaPtr body) {
  return mk(Formula{FExistsUnique{std::move(v), std::move(body)}});
}
FormulaPtr is_nat(TermPtr t) { return mk(Formula{FNat{std::move(t)}}); }
FormulaPtr pow2eq(TermPtr p, TermPtr z) {
  return mk(Formula{FPow2{std::move(p), std::move(z)}});
}
FormulaPtr paireq(TermPtr m, TermPtr k, TermPtr z) {
  return mk(Formula{FPairEq{std::move(m), std::move(k), std::move(z)}});
}
FormulaPtr prat(TermPtr y, TermPtr p) {
  return mk(Formula{FPRational{std::move(y), std::move(p)}});
}
FormulaPtr bracket(TermPtr x, TermPtr p) {
  return mk(Formula{FBracket{std::move(x), std::move(p)}});
}
FormulaPtr catom(TermPtr x, TermPtr k, TermPtr m) {
  return mk(Formula{FCAtom{std::move(x), std::move(k), std::move(m)}});
}
FormulaPtr code(TermPtr x) { return mk(Formula{FCode{std::move(x)}}); }
FormulaPtr in01(TermPtr x) { return mk(Formula{FIn01{std::move(x)}}); }

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

std::vector<FormulaPtr> conjuncts(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  // walk the spine of nested Ands in display order
  std::vector<FormulaPtr> stack{f};
  while (!stack.empty()) {
    FormulaPtr cur = stack.back();
    stack.pop_back();
    if (const auto* a = std::get_if<FAnd>(&cur->node)) {
      stack.push_back(a->rhs);
      stack.push_back(a->lhs);
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TVar& x) { return x.name == std::get<TVar>(b->node).name; },
          [&](const TZero&) { return true; },
          [&](const TOne&) { return true; },
          [&](const TNeg& x) { return equal(x.arg, std::get<TNeg>(b->node).arg); },
          [&](const TAdd& x) {
            const auto& y = std::get<TAdd>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const TMul& x) {
            const auto& y = std::get<TMul>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          }},
      a->node);
}

namespace {

using Renaming = std::map<std::string, std::string>;

bool alpha_term(const TermPtr& a, const TermPtr& b, const Renaming& ra,
                const Renaming& rb) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TVar& x) {
            const auto& y = std::get<TVar>(b->node);
            auto ia = ra.find(x.name);
            auto ib = rb.find(y.name);
            if ((ia == ra.end()) != (ib == rb.end())) return false;
            if (ia != ra.end()) return ia->second == ib->second;
            return x.name == y.name;
          },
          [&](const TZero&) { return true; },
          [&](const TOne&) { return true; },
          [&](const TNeg& x) {
            return alpha_term(x.arg, std::get<TNeg>(b->node).arg, ra, rb);
          },
          [&](const TAdd& x) {
            const auto& y = std::get<TAdd>(b->node);
            return alpha_term(x.lhs, y.lhs, ra, rb) &&
                   alpha_term(x.rhs, y.rhs, ra, rb);
          },
          [&](const TMul& x) {
            const auto& y = std::get<TMul>(b->node);
            return alpha_term(x.lhs, y.lhs, ra, rb) &&
                   alpha_term(x.rhs, y.rhs, ra, rb);
          }},
      a->node);
}

bool alpha_formula(const FormulaPtr& a, const FormulaPtr& b, Renaming ra,
                   Renaming rb, unsigned long depth) {
  if (a->node.index() != b->node.index()) return false;
  auto bindv = [&](const std::string& va, const std::string& vb,
                   const FormulaPtr& ba, const FormulaPtr& bb) {
    Renaming ra2 = ra, rb2 = rb;
    std::string canon = "#" + std::to_string(depth);
    ra2[va] = canon;
    rb2[vb] = canon;
    return alpha_formula(ba, bb, std::move(ra2), std::move(rb2), depth + 1);
  };
  return std::visit(
      overloaded{
          [&](const FEq& x) {
            const auto& y = std::get<FEq>(b->node);
            return alpha_term(x.lhs, y.lhs, ra, rb) &&
                   alpha_term(x.rhs, y.rhs, ra, rb);
          },
          [&](const FLt& x) {
            const auto& y = std::get<FLt>(b->node);
            return alpha_term(x.lhs, y.lhs, ra, rb) &&
                   alpha_term(x.rhs, y.rhs, ra, rb);
          },
          [&](const FAnd& x) {
            const auto& y = std::get<FAnd>(b->node);
            return alpha_formula(x.lhs, y.lhs, ra, rb, depth) &&
                   alpha_formula(x.rhs, y.rhs, ra, rb, depth);
          },
          [&](const FOr& x) {
            const auto& y = std::get<FOr>(b->node);
            return alpha_formula(x.lhs, y.lhs, ra, rb, depth) &&
                   alpha_formula(x.rhs, y.rhs, ra, rb, depth);
          },
          [&](const FImp& x) {
            const auto& y = std::get<FImp>(b->node);
            return alpha_formula(x.lhs, y.lhs, ra, rb, depth) &&
                   alpha_formula(x.rhs, y.rhs, ra, rb, depth);
          },
          [&](const FNot& x) {
            return alpha_formula(x.arg, std::get<FNot>(b->node).arg, ra, rb,
                                 depth);
          },
          [&](const FExists& x) {
            const auto& y = std::get<FExists>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FForall& x) {
            const auto& y = std::get<FForall>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FExistsUnique& x) {
            const auto& y = std::get<FExistsUnique>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FNat& x) {
            return alpha_term(x.arg, std::get<FNat>(b->node).arg, ra, rb);
          },
          [&](const FPow2& x) {
            const auto& y = std::get<FPow2>(b->node);
            return alpha_term(x.p, y.p, ra, rb) && alpha_term(x.z, y.z, ra, rb);
          },
          [&](const FPairEq& x) {
            const auto& y = std::get<FPairEq>(b->node);
            return alpha_term(x.m, y.m, ra, rb) &&
                   alpha_term(x.k, y.k, ra, rb) && alpha_term(x.z, y.z, ra, rb);
          },
          [&](const FPRational& x) {
            const auto& y = std::get<FPRational>(b->node);
            return alpha_term(x.y, y.y, ra, rb) && alpha_term(x.p, y.p, ra, rb);
          },
          [&](const FBracket& x) {
            const auto& y = std::get<FBracket>(b->node);
            return alpha_term(x.x, y.x, ra, rb) && alpha_term(x.p, y.p, ra, rb);
          },
          [&](const FCAtom& x) {
            const auto& y = std::get<FCAtom>(b->node);
            return alpha_term(x.x, y.x, ra, rb) &&
                   alpha_term(x.k, y.k, ra, rb) && alpha_term(x.m, y.m, ra, rb);
          },
          [&](const FCode& x) {
            return alpha_term(x.x, std::get<FCode>(b->node).x, ra, rb);
          },
          [&](const FIn01& x) {
            return alpha_term(x.x, std::get<FIn01>(b->node).x, ra, rb);
          }},
      a->node);
}

}  // namespace

// Literal structural equality, binder names included.
namespace {
bool literal_eq(const FormulaPtr& a, const FormulaPtr& b);
bool literal_eq_children(const FormulaPtr& a, const FormulaPtr& b) {
  return std::visit(
      overloaded{
          [&](const FEq& x) {
            const auto& y = std::get<FEq>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const FLt& x) {
            const auto& y = std::get<FLt>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const FAnd& x) {
            const auto& y = std::get<FAnd>(b->node);
            return literal_eq(x.lhs, y.lhs) && literal_eq(x.rhs, y.rhs);
          },
          [&](const FOr& x) {
            const auto& y = std::get<FOr>(b->node);
            return literal_eq(x.lhs, y.lhs) && literal_eq(x.rhs, y.rhs);
          },
          [&](const FImp& x) {
            const auto& y = std::get<FImp>(b->node);
            return literal_eq(x.lhs, y.lhs) && literal_eq(x.rhs, y.rhs);
          },
          [&](const FNot& x) {
            return literal_eq(x.arg, std::get<FNot>(b->node).arg);
          },
          [&](const FExists& x) {
            const auto& y = std::get<FExists>(b->node);
            return x.var == y.var && literal_eq(x.body, y.body);
          },
          [&](const FForall& x) {
            const auto& y = std::get<FForall>(b->node);
            return x.var == y.var && literal_eq(x.body, y.body);
          },
          [&](const FExistsUnique& x) {
            const auto& y = std::get<FExistsUnique>(b->node);
            return x.var == y.var && literal_eq(x.body, y.body);
          },
          [&](const FNat& x) {
            return equal(x.arg, std::get<FNat>(b->node).arg);
          },
          [&](const FPow2& x) {
            const auto& y = std::get<FPow2>(b->node);
            return equal(x.p, y.p) && equal(x.z, y.z);
          },
          [&](const FPairEq& x) {
            const auto& y = std::get<FPairEq>(b->node);
            return equal(x.m, y.m) && equal(x.k, y.k) && equal(x.z, y.z);
          },
          [&](const FPRational& x) {
            const auto& y = std::get<FPRational>(b->node);
            return equal(x.y, y.y) && equal(x.p, y.p);
          },
          [&](const FBracket& x) {
            const auto& y = std::get<FBracket>(b->node);
            return equal(x.x, y.x) && equal(x.p, y.p);
          },
          [&](const FCAtom& x) {
            const auto& y = std::get<FCAtom>(b->node);
            return equal(x.x, y.x) && equal(x.k, y.k) && equal(x.m, y.m);
          },
          [&](const FCode& x) { return equal(x.x, std::get<FCode>(b->node).x); },
          [&](const FIn01& x) { return equal(x.x, std::get<FIn01>(b->node).x); }},
      a->node);
}
bool literal_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return literal_eq_children(a, b);
}
}  // namespace

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return literal_eq(a, b);
}

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return alpha_formula(a, b, {}, {}, 0);
}

namespace {

void walk_term(const TermPtr& t, const std::set<std::string>& bound,
               std::set<std::string>* free, std::set<std::string>* all) {
  std::visit(overloaded{[&](const TVar& x) {
                          if (all) all->insert(x.name);
                          if (free && !bound.count(x.name)) free->insert(x.name);
                        },
                        [&](const TZero&) {},
                        [&](const TOne&) {},
                        [&](const TNeg& x) { walk_term(x.arg, bound, free, all); },
                        [&](const TAdd& x) {
                          walk_term(x.lhs, bound, free, all);
                          walk_term(x.rhs, bound, free, all);
                        },
                        [&](const TMul& x) {
                          walk_term(x.lhs, bound, free, all);
                          walk_term(x.rhs, bound, free, all);
                        }},
             t->node);
}

void walk_formula(const FormulaPtr& f, std::set<std::string> bound,
                  std::set<std::string>* free, std::set<std::string>* all) {
  auto term = [&](const TermPtr& t) { walk_term(t, bound, free, all); };
  std::visit(
      overloaded{
          [&](const FEq& x) { term(x.lhs); term(x.rhs); },
          [&](const FLt& x) { term(x.lhs); term(x.rhs); },
          [&](const FAnd& x) {
            walk_formula(x.lhs, bound, free, all);
            walk_formula(x.rhs, bound, free, all);
          },
          [&](const FOr& x) {
            walk_formula(x.lhs, bound, free, all);
            walk_formula(x.rhs, bound, free, all);
          },
          [&](const FImp& x) {
            walk_formula(x.lhs, bound, free, all);
            walk_formula(x.rhs, bound, free, all);
          },
          [&](const FNot& x) { walk_formula(x.arg, bound, free, all); },
          [&](const FExists& x) {
            if (all) all->insert(x.var);
            auto b2 = bound;
            b2.insert(x.var);
            walk_formula(x.body, std::move(b2), free, all);
          },
          [&](const FForall& x) {
            if (all) all->insert(x.var);
            auto b2 = bound;
            b2.insert(x.var);
            walk_formula(x.body, std::move(b2), free, all);
          },
          [&](const FExistsUnique& x) {
            if (all) all->insert(x.var);
            auto b2 = bound;
            b2.insert(x.var);
            walk_formula(x.body, std::move(b2), free, all);
          },
          [&](const FNat& x) { term(x.arg); },
          [&](const FPow2& x) { term(x.p); term(x.z); },
          [&](const FPairEq& x) { term(x.m); term(x.k); term(x.z); },
          [&](const FPRational& x) { term(x.y); term(x.p); },
          [&](const FBracket& x) { term(x.x); term(x.p); },
          [&](const FCAtom& x) { term(x.x); term(x.k); term(x.m); },
          [&](const FCode& x) { term(x.x); },
          [&](const FIn01& x) { term(x.x); }},
      f->node);
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> fv;
  walk_formula(f, {}, &fv, nullptr);
  return fv;
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> fv;
  walk_term(t, {}, &fv, nullptr);
  return fv;
}

std::set<std::string> all_names(const FormulaPtr& f) {
  std::set<std::string> names;
  walk_formula(f, {}, nullptr, &names);
  return names;
}

TermPtr substitute(const TermPtr& t, const std::string& v,
                   const TermPtr& replacement) {
  return std::visit(
      overloaded{
          [&](const TVar& x) { return x.name == v ? replacement : t; },
          [&](const TZero&) { return t; },
          [&](const TOne&) { return t; },
          [&](const TNeg& x) { return neg(substitute(x.arg, v, replacement)); },
          [&](const TAdd& x) {
            return add(substitute(x.lhs, v, replacement),
                       substitute(x.rhs, v, replacement));
          },
          [&](const TMul& x) {
            return mul(substitute(x.lhs, v, replacement),
                       substitute(x.rhs, v, replacement));
          }},
      t->node);
}

namespace {

FormulaPtr subst_f(const FormulaPtr& f, const std::string& v,
                   const TermPtr& replacement, FreshNames& fresh) {
  auto st = [&](const TermPtr& t) { return substitute(t, v, replacement); };
  auto sf = [&](const FormulaPtr& g) { return subst_f(g, v, replacement, fresh); };
  auto binder = [&](const std::string& bv, const FormulaPtr& body,
                    auto rebuild) -> FormulaPtr {
    if (bv == v) return rebuild(bv, body);  // v is shadowed below
    if (free_vars(replacement).count(bv)) {
      // rename the binder before substituting to avoid capture
      std::string nv = fresh.fresh(bv);
      FormulaPtr body2 = subst_f(body, bv, var(nv), fresh);
      return rebuild(nv, subst_f(body2, v, replacement, fresh));
    }
    return rebuild(bv, sf(body));
  };
  return std::visit(
      overloaded{
          [&](const FEq& x) { return eq(st(x.lhs), st(x.rhs)); },
          [&](const FLt& x) { return lt(st(x.lhs), st(x.rhs)); },
          [&](const FAnd& x) { return conj(sf(x.lhs), sf(x.rhs)); },
          [&](const FOr& x) { return disj(sf(x.lhs), sf(x.rhs)); },
          [&](const FImp& x) { return imp(sf(x.lhs), sf(x.rhs)); },
          [&](const FNot& x) { return lnot(sf(x.arg)); },
          [&](const FExists& x) {
            return binder(x.var, x.body, [](std::string nv, FormulaPtr b) {
              return exists(std::move(nv), std::move(b));
            });
          },
          [&](const FForall& x) {
            return binder(x.var, x.body, [](std::string nv, FormulaPtr b) {
              return forall(std::move(nv), std::move(b));
            });
          },
          [&](const FExistsUnique& x) {
            return binder(x.var, x.body, [](std::string nv, FormulaPtr b) {
              return exists_unique(std::move(nv), std::move(b));
            });
          },
          [&](const FNat& x) { return is_nat(st(x.arg)); },
          [&](const FPow2& x) { return pow2eq(st(x.p), st(x.z)); },
          [&](const FPairEq& x) { return paireq(st(x.m), st(x.k), st(x.z)); },
          [&](const FPRational& x) { return prat(st(x.y), st(x.p)); },
          [&](const FBracket& x) { return bracket(st(x.x), st(x.p)); },
          [&](const FCAtom& x) { return catom(st(x.x), st(x.k), st(x.m)); },
          [&](const FCode& x) { return code(st(x.x)); },
          [&](const FIn01& x) { return in01(st(x.x)); }},
      f->node);
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                      const TermPtr& replacement) {
  FreshNames fresh(all_names(f));
  for (const auto& n : free_vars(replacement)) fresh.reserve(n);
  return subst_f(f, v, replacement, fresh);
}

namespace {

template <typename Pred>
bool any_formula(const FormulaPtr& f, Pred pred) {
  if (pred(f)) return true;
  return std::visit(
      overloaded{
          [&](const FAnd& x) {
            return any_formula(x.lhs, pred) || any_formula(x.rhs, pred);
          },
          [&](const FOr& x) {
            return any_formula(x.lhs, pred) || any_formula(x.rhs, pred);
          },
          [&](const FImp& x) {
            return any_formula(x.lhs, pred) || any_formula(x.rhs, pred);
          },
          [&](const FNot& x) { return any_formula(x.arg, pred); },
          [&](const FExists& x) { return any_formula(x.body, pred); },
          [&](const FForall& x) { return any_formula(x.body, pred); },
          [&](const FExistsUnique& x) { return any_formula(x.body, pred); },
          [&](const auto&) { return false; }},
      f->node);
}

}  // namespace

bool abbreviation_free_except_n(const FormulaPtr& f) {
  return !any_formula(f, [](const FormulaPtr& g) {
    return std::holds_alternative<FPow2>(g->node) ||
           std::holds_alternative<FPairEq>(g->node) ||
           std::holds_alternative<FPRational>(g->node) ||
           std::holds_alternative<FBracket>(g->node) ||
           std::holds_alternative<FCAtom>(g->node) ||
           std::holds_alternative<FCode>(g->node) ||
           std::holds_alternative<FIn01>(g->node) ||
           std::holds_alternative<FExistsUnique>(g->node);
  });
}

bool contains_pow2(const FormulaPtr& f) {
  return any_formula(f, [](const FormulaPtr& g) {
    return std::holds_alternative<FPow2>(g->node);
  });
}

namespace {

bool path_clean(const FormulaPtr& f, std::set<std::string>& on_path,
                const std::set<std::string>& free) {
  auto enter = [&](const std::string& v, const FormulaPtr& body) {
    if (on_path.count(v) || free.count(v)) return false;
    on_path.insert(v);
    bool ok = path_clean(body, on_path, free);
    on_path.erase(v);
    return ok;
  };
  return std::visit(
      overloaded{
          [&](const FAnd& x) {
            return path_clean(x.lhs, on_path, free) &&
                   path_clean(x.rhs, on_path, free);
          },
          [&](const FOr& x) {
            return path_clean(x.lhs, on_path, free) &&
                   path_clean(x.rhs, on_path, free);
          },
          [&](const FImp& x) {
            return path_clean(x.lhs, on_path, free) &&
                   path_clean(x.rhs, on_path, free);
          },
          [&](const FNot& x) { return path_clean(x.arg, on_path, free); },
          [&](const FExists& x) { return enter(x.var, x.body); },
          [&](const FForall& x) { return enter(x.var, x.body); },
          [&](const FExistsUnique& x) { return enter(x.var, x.body); },
          [&](const auto&) { return true; }},
      f->node);
}

}  // namespace

bool binder_path_clean(const FormulaPtr& f) {
  std::set<std::string> on_path;
  auto free = free_vars(f);
  return path_clean(f, on_path, free);
}

}  // namespace seqcode::lor
