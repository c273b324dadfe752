#include "seqcode/coding.hpp"

#include "seqcode/errors.hpp"

namespace seqcode {

using lor::FormulaPtr;
using lor::TermPtr;

namespace {

TermPtr two() { return lor::add(lor::one(), lor::one()); }

// 4t+1 and 4t+3 with the numeral structure shared
TermPtr four_t_plus(const TermPtr& t, unsigned long c) {
  return lor::add(lor::mul(lor::numeral(4), t), lor::numeral(c));
}

}  // namespace

FormulaPtr prational_template(const TermPtr& y, const TermPtr& p,
                              FreshNames& fresh) {
  using namespace lor;
  std::string q = fresh.fresh("q");
  std::string z = fresh.fresh("z");
  return exists(q, conj(is_nat(var(q)),
                        exists(z, conj(pow2eq(p, var(z)),
                                       eq(mul(y, var(z)), var(q))))));
}

FormulaPtr bracket_template(const TermPtr& x, const TermPtr& p,
                            FreshNames& fresh) {
  using namespace lor;
  std::string w = fresh.fresh("w");  // predecessor of p
  std::string y = fresh.fresh("y");
  std::string z = fresh.fresh("z");
  TermPtr diff = mul(var(z), add(x, neg(var(y))));
  FormulaPtr inner =
      exists(z, conj(pow2eq(p, var(z)),
                     conj(lt(zero(), diff), lt(diff, one()))));
  FormulaPtr with_y = exists(y, conj(prat(var(y), var(w)), inner));
  return exists(w, conj(is_nat(var(w)),
                        conj(eq(add(var(w), one()), p), with_y)));
}

FormulaPtr catom_template(const TermPtr& x, const TermPtr& k, const TermPtr& m,
                          FreshNames& fresh, PairConvention conv) {
  using namespace lor;
  std::string p = fresh.fresh("p");
  std::string z = fresh.fresh("z");
  FormulaPtr pattern =
      forall(p, imp(is_nat(var(p)),
                    conj(bracket(x, four_t_plus(var(p), 1)),
                         lnot(bracket(x, four_t_plus(var(p), 3))))));
  FormulaPtr pair_part = conv == PairConvention::ArgValue
                             ? paireq(k, m, var(z))
                             : paireq(m, k, var(z));
  FormulaPtr graph =
      exists(z, conj(pair_part, lnot(bracket(x, mul(two(), var(z))))));
  return conj(pattern, graph);
}

FormulaPtr code_template(const TermPtr& x, FreshNames& fresh,
                         PairConvention conv) {
  using namespace lor;
  std::string m = fresh.fresh("m");
  std::string k = fresh.fresh("k");
  std::string z = fresh.fresh("z");
  FormulaPtr pair_part = conv == PairConvention::ArgValue
                             ? paireq(var(m), var(k), var(z))
                             : paireq(var(k), var(m), var(z));
  FormulaPtr unique_bit = exists_unique(
      k, conj(is_nat(var(k)),
              exists(z, conj(pair_part,
                             lnot(bracket(x, mul(two(), var(z))))))));
  return forall(
      m, imp(is_nat(var(m)),
             conj(bracket(x, four_t_plus(var(m), 1)),
                  conj(lnot(bracket(x, four_t_plus(var(m), 3))),
                       unique_bit))));
}

FormulaPtr in01_template(const TermPtr& x) {
  using namespace lor;
  return conj(leq(zero(), x), leq(x, one()));
}

FormulaPtr exists_unique_template(const std::string& v,
                                  const lor::FormulaPtr& body,
                                  FreshNames& fresh) {
  using namespace lor;
  std::string j = fresh.fresh("j");
  FormulaPtr copy = substitute(body, v, var(j));
  return exists(v, conj(body, forall(j, imp(copy, eq(var(j), var(v))))));
}

FormulaPtr pow2_beta_template(const TermPtr& p, const TermPtr& z,
                              FreshNames& fresh) {
  using namespace lor;
  std::string b = fresh.fresh("b");
  std::string u = fresh.fresh("u");

  // beta(u,b,i) = t: exists d (N(d) /\ d = 1 + (i+1)*b /\
  //   exists q (N(q) /\ u = q*d + t /\ t < d))
  auto beta_eq = [&](const TermPtr& i, const TermPtr& t) -> FormulaPtr {
    std::string d = fresh.fresh("d");
    std::string q = fresh.fresh("q");
    FormulaPtr divides =
        exists(q, conj(is_nat(var(q)),
                       conj(eq(var(u), add(mul(var(q), var(d)), t)),
                            lt(t, var(d)))));
    return exists(d, conj(is_nat(var(d)),
                          conj(eq(var(d), add(one(), mul(add(i, one()),
                                                         var(b)))),
                               divides)));
  };

  std::string i = fresh.fresh("i");
  std::string r = fresh.fresh("r");
  FormulaPtr start = beta_eq(zero(), one());
  FormulaPtr step = forall(
      i, imp(is_nat(var(i)),
             imp(lt(var(i), p),
                 forall(r, imp(conj(is_nat(var(r)), beta_eq(var(i), var(r))),
                               beta_eq(add(var(i), one()),
                                       mul(two(), var(r))))))));
  FormulaPtr finish = beta_eq(p, z);
  return exists(
      b, conj(is_nat(var(b)),
              exists(u, conj(is_nat(var(u)),
                             conj(start, conj(step, finish))))));
}

namespace {

FormulaPtr expand_rec(const FormulaPtr& f, const ExpansionLevel& level,
                      PairConvention conv, FreshNames& fresh);

FormulaPtr expand_children(const FormulaPtr& f, const ExpansionLevel& level,
                           PairConvention conv, FreshNames& fresh) {
  using namespace lor;
  auto go = [&](const FormulaPtr& g) {
    return expand_rec(g, level, conv, fresh);
  };
  return std::visit(
      overloaded{
          [&](const FAnd& x) { return conj(go(x.lhs), go(x.rhs)); },
          [&](const FOr& x) { return disj(go(x.lhs), go(x.rhs)); },
          [&](const FImp& x) { return imp(go(x.lhs), go(x.rhs)); },
          [&](const FNot& x) { return lnot(go(x.arg)); },
          [&](const FExists& x) { return exists(x.var, go(x.body)); },
          [&](const FForall& x) { return forall(x.var, go(x.body)); },
          [&](const FExistsUnique& x) {
            return exists_unique(x.var, go(x.body));
          },
          [&](const auto&) { return f; }},
      f->node);
}

FormulaPtr expand_rec(const FormulaPtr& f, const ExpansionLevel& level,
                      PairConvention conv, FreshNames& fresh) {
  using namespace lor;
  if (level.kind == ExpansionLevel::Kind::Abbreviated) return f;
  auto again = [&](const FormulaPtr& g) {
    return expand_rec(g, level, conv, fresh);
  };
  return std::visit(
      overloaded{
          [&](const FPRational& x) {
            return again(prational_template(x.y, x.p, fresh));
          },
          [&](const FBracket& x) {
            return again(bracket_template(x.x, x.p, fresh));
          },
          [&](const FCAtom& x) {
            return again(catom_template(x.x, x.k, x.m, fresh, conv));
          },
          [&](const FCode& x) { return again(code_template(x.x, fresh, conv)); },
          [&](const FIn01& x) { return again(in01_template(x.x)); },
          [&](const FPairEq& x) { return again(pair_graph(x.m, x.k, x.z)); },
          [&](const FPow2& x) -> FormulaPtr {
            if (!level.expand_pow2) return f;
            return again(pow2_beta_template(x.p, x.z, fresh));
          },
          [&](const FExistsUnique& x) {
            FormulaPtr body = again(x.body);
            return again(exists_unique_template(x.var, body, fresh));
          },
          [&](const auto&) { return expand_children(f, level, conv, fresh); }},
      f->node);
}

}  // namespace

FormulaPtr expand(const FormulaPtr& f, ExpansionLevel level,
                  PairConvention conv) {
  FreshNames fresh(lor::all_names(f));
  return expand_rec(f, level, conv, fresh);
}

namespace {

FormulaPtr build(const FormulaPtr& abbreviated, ExpansionLevel level,
                 PairConvention conv) {
  if (level.kind == ExpansionLevel::Kind::Abbreviated) return abbreviated;
  return expand(abbreviated, level, conv);
}

}  // namespace

FormulaPtr prational_formula(const std::string& y, const std::string& p,
                             ExpansionLevel level) {
  if (y == p) throw DomainError("prational_formula: names must be distinct");
  return build(lor::prat(lor::var(y), lor::var(p)), level,
               PairConvention::ArgValue);
}

FormulaPtr bracket_formula(const std::string& x, const std::string& p,
                           ExpansionLevel level) {
  if (x == p) throw DomainError("bracket_formula: names must be distinct");
  return build(lor::bracket(lor::var(x), lor::var(p)), level,
               PairConvention::ArgValue);
}

FormulaPtr catom_formula(const std::string& x, const TermPtr& k,
                         const TermPtr& m, ExpansionLevel level,
                         PairConvention conv) {
  auto kv = lor::free_vars(k);
  auto mv = lor::free_vars(m);
  if (kv.count(x) || mv.count(x))
    throw DomainError("catom_formula: '" + x +
                      "' also occurs in the index terms");
  return build(lor::catom(lor::var(x), k, m), level, conv);
}

FormulaPtr code_formula(const std::string& x, ExpansionLevel level,
                        PairConvention conv) {
  return build(lor::code(lor::var(x)), level, conv);
}

FormulaPtr pow2_formula(const std::string& p, const std::string& z,
                        ExpansionLevel level) {
  if (p == z) throw DomainError("pow2_formula: names must be distinct");
  FormulaPtr atom = lor::pow2eq(lor::var(p), lor::var(z));
  if (level.kind == ExpansionLevel::Kind::Abbreviated || !level.expand_pow2)
    return atom;
  return expand(atom, level, PairConvention::ArgValue);
}

l1::FormulaPtr rks_instance(const l1::FormulaPtr& phi,
                            std::optional<std::string> beta) {
  using namespace l1;
  auto free = free_vars(phi);
  FreshNames fresh(all_names(phi));

  std::string b;
  if (beta) {
    b = *beta;
    for (const auto& v : free)
      if (v.name == b) throw FreeVariableClash(b);
    fresh.reserve(b);
  } else {
    b = fresh.fresh("b");
  }

  std::string n = fresh.fresh("n");
  std::string v = fresh.fresh("v");
  std::string k = fresh.fresh("k");
  std::string m = fresh.fresh("m");

  // Ex n (b(n) > 0), with beta(n) > 0 spelled Ex v (b(n) = v /\ 0 < v)
  auto positive_somewhere = exists_nat(
      n, exists_nat(v, conj(seq_eq(b, var(n), var(v)), lt(zero(), var(v)))));

  FormulaPtr c1 = imp(positive_somewhere, phi);
  FormulaPtr c2 = imp(lnot(positive_somewhere), lnot(phi));
  FormulaPtr c3 = forall_nat(
      k, imp(lt(zero(), var(k)),
             imp(lnot(exists_nat(n, seq_eq(b, var(n), var(k)))),
                 disj(phi, lnot(phi)))));
  // All m >= n rendered as Lt(n, S(m))
  FormulaPtr c4 = forall_nat(
      k, imp(lt(zero(), var(k)),
             forall_nat(
                 n, imp(seq_eq(b, var(n), var(k)),
                        forall_nat(m, imp(lt(var(n), succ(var(m))),
                                          seq_eq(b, var(m), var(k))))))));

  return exists_seq(b, conj(c1, conj(c2, conj(c3, c4))));
}

}  // namespace seqcode
