#include "seqcode/l1_ast.hpp"

#include <map>

namespace seqcode::l1 {

namespace {
TermPtr mk(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr mk(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace

TermPtr var(std::string name) { return mk(Term{TVar{std::move(name)}}); }
TermPtr zero() { return mk(Term{TZero{}}); }
TermPtr one() { return mk(Term{TOne{}}); }
TermPtr succ(TermPtr t) { return mk(Term{TSucc{std::move(t)}}); }
TermPtr add(TermPtr a, TermPtr b) {
  return mk(Term{TAdd{std::move(a), std::move(b)}});
}
TermPtr mul(TermPtr a, TermPtr b) {
  return mk(Term{TMul{std::move(a), std::move(b)}});
}
TermPtr seq_app(std::string seq, TermPtr arg) {
  return mk(Term{TSeqApp{std::move(seq), std::move(arg)}});
}
TermPtr bounded_op(OpKind kind, std::string var, TermPtr bound,
                   std::string seq) {
  return mk(Term{TBoundedOp{kind, std::move(var), std::move(bound),
                            std::move(seq)}});
}
TermPtr numeral(unsigned long n) {
  TermPtr t = zero();
  for (unsigned long i = 0; i < n; ++i) t = succ(t);
  return t;
}

FormulaPtr eq(TermPtr a, TermPtr b) {
  return mk(Formula{FEq{std::move(a), std::move(b)}});
}
FormulaPtr lt(TermPtr a, TermPtr b) {
  return mk(Formula{FLt{std::move(a), std::move(b)}});
}
FormulaPtr seq_eq(std::string seq, TermPtr arg, TermPtr value) {
  return mk(Formula{FSeqEq{std::move(seq), std::move(arg), std::move(value)}});
}
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
FormulaPtr exists_nat(std::string v, FormulaPtr body) {
  return mk(Formula{FExistsNat{std::move(v), std::move(body)}});
}
FormulaPtr forall_nat(std::string v, FormulaPtr body) {
  return mk(Formula{FForallNat{std::move(v), std::move(body)}});
}
FormulaPtr exists_seq(std::string v, FormulaPtr body) {
  return mk(Formula{FExistsSeq{std::move(v), std::move(body)}});
}
FormulaPtr forall_seq(std::string v, FormulaPtr body) {
  return mk(Formula{FForallSeq{std::move(v), std::move(body)}});
}

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs) {
  FormulaPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = conj(*it, acc);
  return acc;
}

std::vector<FormulaPtr> conjuncts(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
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
          [&](const TSucc& x) {
            return equal(x.arg, std::get<TSucc>(b->node).arg);
          },
          [&](const TAdd& x) {
            const auto& y = std::get<TAdd>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const TMul& x) {
            const auto& y = std::get<TMul>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const TSeqApp& x) {
            const auto& y = std::get<TSeqApp>(b->node);
            return x.seq == y.seq && equal(x.arg, y.arg);
          },
          [&](const TBoundedOp& x) {
            const auto& y = std::get<TBoundedOp>(b->node);
            return x.kind == y.kind && x.var == y.var && x.seq == y.seq &&
                   equal(x.bound, y.bound);
          }},
      a->node);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
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
          [&](const FSeqEq& x) {
            const auto& y = std::get<FSeqEq>(b->node);
            return x.seq == y.seq && equal(x.arg, y.arg) &&
                   equal(x.value, y.value);
          },
          [&](const FAnd& x) {
            const auto& y = std::get<FAnd>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const FOr& x) {
            const auto& y = std::get<FOr>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const FImp& x) {
            const auto& y = std::get<FImp>(b->node);
            return equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const FNot& x) { return equal(x.arg, std::get<FNot>(b->node).arg); },
          [&](const FExistsNat& x) {
            const auto& y = std::get<FExistsNat>(b->node);
            return x.var == y.var && equal(x.body, y.body);
          },
          [&](const FForallNat& x) {
            const auto& y = std::get<FForallNat>(b->node);
            return x.var == y.var && equal(x.body, y.body);
          },
          [&](const FExistsSeq& x) {
            const auto& y = std::get<FExistsSeq>(b->node);
            return x.var == y.var && equal(x.body, y.body);
          },
          [&](const FForallSeq& x) {
            const auto& y = std::get<FForallSeq>(b->node);
            return x.var == y.var && equal(x.body, y.body);
          }},
      a->node);
}

namespace {

using Renaming = std::map<std::string, std::string>;

std::string look(const Renaming& r, const std::string& n) {
  auto it = r.find(n);
  return it == r.end() ? n : it->second;
}

bool alpha_term(const TermPtr& a, const TermPtr& b, const Renaming& ra,
                const Renaming& rb) {
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const TVar& x) {
            return look(ra, x.name) == look(rb, std::get<TVar>(b->node).name);
          },
          [&](const TZero&) { return true; },
          [&](const TOne&) { return true; },
          [&](const TSucc& x) {
            return alpha_term(x.arg, std::get<TSucc>(b->node).arg, ra, rb);
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
          },
          [&](const TSeqApp& x) {
            const auto& y = std::get<TSeqApp>(b->node);
            return look(ra, x.seq) == look(rb, y.seq) &&
                   alpha_term(x.arg, y.arg, ra, rb);
          },
          [&](const TBoundedOp& x) {
            const auto& y = std::get<TBoundedOp>(b->node);
            if (x.kind != y.kind) return false;
            if (!alpha_term(x.bound, y.bound, ra, rb)) return false;
            if (look(ra, x.seq) != look(rb, y.seq)) return false;
            // the bound variable is a binder over the summand seq(var)
            return true;
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
          [&](const FSeqEq& x) {
            const auto& y = std::get<FSeqEq>(b->node);
            return look(ra, x.seq) == look(rb, y.seq) &&
                   alpha_term(x.arg, y.arg, ra, rb) &&
                   alpha_term(x.value, y.value, ra, rb);
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
          [&](const FExistsNat& x) {
            const auto& y = std::get<FExistsNat>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FForallNat& x) {
            const auto& y = std::get<FForallNat>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FExistsSeq& x) {
            const auto& y = std::get<FExistsSeq>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          },
          [&](const FForallSeq& x) {
            const auto& y = std::get<FForallSeq>(b->node);
            return bindv(x.var, y.var, x.body, y.body);
          }},
      a->node);
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return alpha_formula(a, b, {}, {}, 0);
}

namespace {

// One traversal serves free_vars, all_names and the sort checker.
struct Walker {
  std::set<VarOcc>* free = nullptr;
  std::set<std::string>* all = nullptr;
  std::optional<SortIssue> issue;
  // innermost binding in scope
  std::map<std::string, Sort> bound;
  // sorts observed for free names
  std::map<std::string, Sort> free_sorts;
  bool check_sorts = false;

  void occur(const std::string& name, Sort sort, const std::string& path) {
    if (all) all->insert(name);
    auto it = bound.find(name);
    if (it != bound.end()) {
      if (check_sorts && it->second != sort && !issue)
        issue = SortIssue{path, "'" + name + "' bound at " +
                                    (it->second == Sort::Nat ? "Nat" : "Seq") +
                                    " used at " +
                                    (sort == Sort::Nat ? "Nat" : "Seq")};
      return;
    }
    if (free) free->insert({name, sort});
    auto [fit, inserted] = free_sorts.emplace(name, sort);
    if (check_sorts && !inserted && fit->second != sort && !issue)
      issue = SortIssue{path, "free '" + name + "' used at both sorts"};
  }

  void term(const TermPtr& t, const std::string& path) {
    std::visit(
        overloaded{
            [&](const TVar& x) { occur(x.name, Sort::Nat, path + "/Var"); },
            [&](const TZero&) {},
            [&](const TOne&) {},
            [&](const TSucc& x) { term(x.arg, path + "/S"); },
            [&](const TAdd& x) {
              term(x.lhs, path + "/Add.lhs");
              term(x.rhs, path + "/Add.rhs");
            },
            [&](const TMul& x) {
              term(x.lhs, path + "/Mul.lhs");
              term(x.rhs, path + "/Mul.rhs");
            },
            [&](const TSeqApp& x) {
              occur(x.seq, Sort::Seq, path + "/SeqApp.seq");
              term(x.arg, path + "/SeqApp.arg");
            },
            [&](const TBoundedOp& x) {
              occur(x.seq, Sort::Seq, path + "/BoundedOp.seq");
              term(x.bound, path + "/BoundedOp.bound");
              if (check_sorts && !issue) {
                // the bound variable must not occur in the bound term
                std::set<VarOcc> fv;
                Walker w;
                w.free = &fv;
                w.term(x.bound, "");
                for (const auto& v : fv)
                  if (v.name == x.var) {
                    issue = SortIssue{path + "/BoundedOp",
                                      "bound variable '" + x.var +
                                          "' occurs in its bound term"};
                    break;
                  }
              }
              // x.var is binding inside the summand seq(var); the summand
              // is implicit, so the only occurrence to record is seq.
            }},
        t->node);
  }

  template <typename Binder>
  void binder(const Binder& x, Sort sort, const std::string& path) {
    if (all) all->insert(x.var);
    auto saved = bound;
    bound[x.var] = sort;
    formula(x.body, path);
    bound = std::move(saved);
  }

  void formula(const FormulaPtr& f, const std::string& path) {
    std::visit(
        overloaded{
            [&](const FEq& x) {
              term(x.lhs, path + "/Eq.lhs");
              term(x.rhs, path + "/Eq.rhs");
            },
            [&](const FLt& x) {
              term(x.lhs, path + "/Lt.lhs");
              term(x.rhs, path + "/Lt.rhs");
            },
            [&](const FSeqEq& x) {
              occur(x.seq, Sort::Seq, path + "/SeqEq.seq");
              term(x.arg, path + "/SeqEq.arg");
              term(x.value, path + "/SeqEq.value");
            },
            [&](const FAnd& x) {
              formula(x.lhs, path + "/And.lhs");
              formula(x.rhs, path + "/And.rhs");
            },
            [&](const FOr& x) {
              formula(x.lhs, path + "/Or.lhs");
              formula(x.rhs, path + "/Or.rhs");
            },
            [&](const FImp& x) {
              formula(x.lhs, path + "/Imp.lhs");
              formula(x.rhs, path + "/Imp.rhs");
            },
            [&](const FNot& x) { formula(x.arg, path + "/Not"); },
            [&](const FExistsNat& x) {
              binder(x, Sort::Nat, path + "/ExistsNat");
            },
            [&](const FForallNat& x) {
              binder(x, Sort::Nat, path + "/ForallNat");
            },
            [&](const FExistsSeq& x) {
              binder(x, Sort::Seq, path + "/ExistsSeq");
            },
            [&](const FForallSeq& x) {
              binder(x, Sort::Seq, path + "/ForallSeq");
            }},
        f->node);
  }
};

}  // namespace

std::set<VarOcc> free_vars(const FormulaPtr& f) {
  std::set<VarOcc> fv;
  Walker w;
  w.free = &fv;
  w.formula(f, "");
  return fv;
}

std::set<std::string> all_names(const FormulaPtr& f) {
  std::set<std::string> names;
  Walker w;
  w.all = &names;
  w.formula(f, "");
  return names;
}

std::optional<SortIssue> sort_check(const FormulaPtr& f) {
  Walker w;
  w.check_sorts = true;
  w.formula(f, "");
  return w.issue;
}

namespace {

bool term_pred(const TermPtr& t, bool want_bounded) {
  return std::visit(
      overloaded{[&](const TVar&) { return false; },
                 [&](const TZero&) { return false; },
                 [&](const TOne&) { return false; },
                 [&](const TSucc& x) { return term_pred(x.arg, want_bounded); },
                 [&](const TAdd& x) {
                   return term_pred(x.lhs, want_bounded) ||
                          term_pred(x.rhs, want_bounded);
                 },
                 [&](const TMul& x) {
                   return term_pred(x.lhs, want_bounded) ||
                          term_pred(x.rhs, want_bounded);
                 },
                 [&](const TSeqApp& x) {
                   return !want_bounded || term_pred(x.arg, want_bounded);
                 },
                 [&](const TBoundedOp& x) {
                   return want_bounded || term_pred(x.bound, want_bounded);
                 }},
      t->node);
}

bool formula_pred(const FormulaPtr& f, bool want_bounded) {
  return std::visit(
      overloaded{
          [&](const FEq& x) {
            return term_pred(x.lhs, want_bounded) ||
                   term_pred(x.rhs, want_bounded);
          },
          [&](const FLt& x) {
            return term_pred(x.lhs, want_bounded) ||
                   term_pred(x.rhs, want_bounded);
          },
          [&](const FSeqEq& x) {
            return term_pred(x.arg, want_bounded) ||
                   term_pred(x.value, want_bounded);
          },
          [&](const FAnd& x) {
            return formula_pred(x.lhs, want_bounded) ||
                   formula_pred(x.rhs, want_bounded);
          },
          [&](const FOr& x) {
            return formula_pred(x.lhs, want_bounded) ||
                   formula_pred(x.rhs, want_bounded);
          },
          [&](const FImp& x) {
            return formula_pred(x.lhs, want_bounded) ||
                   formula_pred(x.rhs, want_bounded);
          },
          [&](const FNot& x) { return formula_pred(x.arg, want_bounded); },
          [&](const FExistsNat& x) { return formula_pred(x.body, want_bounded); },
          [&](const FForallNat& x) { return formula_pred(x.body, want_bounded); },
          [&](const FExistsSeq& x) { return formula_pred(x.body, want_bounded); },
          [&](const FForallSeq& x) { return formula_pred(x.body, want_bounded); }},
      f->node);
}

}  // namespace

bool contains_bounded_op(const FormulaPtr& f) { return formula_pred(f, true); }
bool contains_seq_app(const FormulaPtr& f) { return formula_pred(f, false); }

namespace {

struct Normalizer {
  FreshNames fresh;
  unsigned long nat_counter = 0, seq_counter = 0;
  std::map<std::string, std::string> renaming;  // innermost scope wins

  std::string next_nat() {
    for (;;) {
      std::string cand = "n" + std::to_string(++nat_counter);
      if (!fresh.is_used(cand)) {
        fresh.reserve(cand);
        return cand;
      }
    }
  }
  std::string next_seq() {
    for (;;) {
      std::string cand = "c" + std::to_string(++seq_counter);
      if (!fresh.is_used(cand)) {
        fresh.reserve(cand);
        return cand;
      }
    }
  }

  std::string look(const std::string& n) const {
    auto it = renaming.find(n);
    return it == renaming.end() ? n : it->second;
  }

  TermPtr term(const TermPtr& t) {
    return std::visit(
        overloaded{
            [&](const TVar& x) { return var(look(x.name)); },
            [&](const TZero&) { return zero(); },
            [&](const TOne&) { return one(); },
            [&](const TSucc& x) { return succ(term(x.arg)); },
            [&](const TAdd& x) { return add(term(x.lhs), term(x.rhs)); },
            [&](const TMul& x) { return mul(term(x.lhs), term(x.rhs)); },
            [&](const TSeqApp& x) { return seq_app(look(x.seq), term(x.arg)); },
            [&](const TBoundedOp& x) {
              // the operator's bound variable is not renamed: it scopes
              // only over the implicit summand seq(var)
              return bounded_op(x.kind, x.var, term(x.bound), look(x.seq));
            }},
        t->node);
  }

  template <typename Rebuild>
  FormulaPtr binder(const std::string& v, const FormulaPtr& body, bool nat,
                    Rebuild rebuild) {
    std::string nv = nat ? next_nat() : next_seq();
    auto saved = renaming;
    renaming[v] = nv;
    FormulaPtr b = formula(body);
    renaming = std::move(saved);
    return rebuild(nv, b);
  }

  FormulaPtr formula(const FormulaPtr& f) {
    return std::visit(
        overloaded{
            [&](const FEq& x) { return eq(term(x.lhs), term(x.rhs)); },
            [&](const FLt& x) { return lt(term(x.lhs), term(x.rhs)); },
            [&](const FSeqEq& x) {
              return seq_eq(look(x.seq), term(x.arg), term(x.value));
            },
            [&](const FAnd& x) { return conj(formula(x.lhs), formula(x.rhs)); },
            [&](const FOr& x) { return disj(formula(x.lhs), formula(x.rhs)); },
            [&](const FImp& x) { return imp(formula(x.lhs), formula(x.rhs)); },
            [&](const FNot& x) { return lnot(formula(x.arg)); },
            [&](const FExistsNat& x) {
              return binder(x.var, x.body, true,
                            [](std::string v, FormulaPtr b) {
                              return exists_nat(std::move(v), std::move(b));
                            });
            },
            [&](const FForallNat& x) {
              return binder(x.var, x.body, true,
                            [](std::string v, FormulaPtr b) {
                              return forall_nat(std::move(v), std::move(b));
                            });
            },
            [&](const FExistsSeq& x) {
              return binder(x.var, x.body, false,
                            [](std::string v, FormulaPtr b) {
                              return exists_seq(std::move(v), std::move(b));
                            });
            },
            [&](const FForallSeq& x) {
              return binder(x.var, x.body, false,
                            [](std::string v, FormulaPtr b) {
                              return forall_seq(std::move(v), std::move(b));
                            });
            }},
        f->node);
  }
};

}  // namespace

FormulaPtr normalize_binders(const FormulaPtr& f) {
  Normalizer n;
  for (const auto& v : free_vars(f)) n.fresh.reserve(v.name);
  return n.formula(f);
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
      overloaded{[&](const FAnd& x) {
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
                 [&](const FExistsNat& x) { return enter(x.var, x.body); },
                 [&](const FForallNat& x) { return enter(x.var, x.body); },
                 [&](const FExistsSeq& x) { return enter(x.var, x.body); },
                 [&](const FForallSeq& x) { return enter(x.var, x.body); },
                 [&](const auto&) { return true; }},
      f->node);
}

}  // namespace

bool binder_path_clean(const FormulaPtr& f) {
  std::set<std::string> on_path;
  std::set<std::string> free;
  for (const auto& v : free_vars(f)) free.insert(v.name);
  return path_clean(f, on_path, free);
}

std::optional<Sort> conventional_sort(const std::string& name) {
  if (name.empty()) return std::nullopt;
  char c = name[0];
  if (c >= 'a' && c <= 'h') return Sort::Seq;
  if (c >= 'i' && c <= 'z') return Sort::Nat;
  return std::nullopt;
}

}  // namespace seqcode::l1
