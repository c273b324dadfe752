#pragma once

#include <optional>
#include <string>

#include "seqcode/l1_ast.hpp"
#include "seqcode/lor_ast.hpp"
#include "seqcode/pairing.hpp"
#include "seqcode/util.hpp"

// Formula templates for the coding of choice sequences: p-rationality,
// the bracket predicate, C(x,k,m), CODE(x), the power-of-two graph, and
// the macro expansion that rewrites abbreviation atoms into pure
// ordered-ring syntax. N always stays primitive.
namespace seqcode {

struct ExpansionLevel {
  enum class Kind { Abbreviated, Arithmetic };
  Kind kind = Kind::Abbreviated;
  // Opt-in Chinese-remainder expansion of Pow2; off by default because
  // the expanded formulas are large and only needed to certify pure-LOR
  // definability.
  bool expand_pow2 = false;

  static ExpansionLevel abbreviated() { return {Kind::Abbreviated, false}; }
  static ExpansionLevel arithmetic(bool beta = false) {
    return {Kind::Arithmetic, beta};
  }
};

// One-step template shapes. Bound variables are drawn from `fresh`,
// which must already contain every name in scope.

// exists q (N(q) /\ exists z (Pow2(p,z) /\ y*z = q))
lor::FormulaPtr prational_template(const lor::TermPtr& y,
                                   const lor::TermPtr& p, FreshNames& fresh);

// exists w (N(w) /\ w+1 = p /\ exists y (PRat(y,w) /\
//   exists z (Pow2(p,z) /\ 0 < z*(x-y) /\ z*(x-y) < 1)))
lor::FormulaPtr bracket_template(const lor::TermPtr& x, const lor::TermPtr& p,
                                 FreshNames& fresh);

// All p (N(p) -> [x,4p+1] /\ ~[x,4p+3]) /\
//   exists z (Pair(k,m,z) /\ ~[x,2z])
lor::FormulaPtr catom_template(const lor::TermPtr& x, const lor::TermPtr& k,
                               const lor::TermPtr& m, FreshNames& fresh,
                               PairConvention conv = PairConvention::ArgValue);

// All m (N(m) -> [x,4m+1] /\ ~[x,4m+3] /\
//   Ex! k (N(k) /\ exists z (Pair(m,k,z) /\ ~[x,2z])))
lor::FormulaPtr code_template(const lor::TermPtr& x, FreshNames& fresh,
                              PairConvention conv = PairConvention::ArgValue);

// 0 <= x /\ x <= 1; the pluggable default for the 0-1-generator range.
lor::FormulaPtr in01_template(const lor::TermPtr& x);

// exists v (body /\ All j (body[v:=j] -> j = v))
lor::FormulaPtr exists_unique_template(const std::string& v,
                                       const lor::FormulaPtr& body,
                                       FreshNames& fresh);

// Goedel beta-function definition of z = 2^p, quantifiers relativized
// to N.
lor::FormulaPtr pow2_beta_template(const lor::TermPtr& p,
                                   const lor::TermPtr& z, FreshNames& fresh);

// Spec-facing builders over variable names.
lor::FormulaPtr prational_formula(const std::string& y, const std::string& p,
                                  ExpansionLevel level);
lor::FormulaPtr bracket_formula(const std::string& x, const std::string& p,
                                ExpansionLevel level);
lor::FormulaPtr catom_formula(const std::string& x, const lor::TermPtr& k,
                              const lor::TermPtr& m, ExpansionLevel level,
                              PairConvention conv = PairConvention::ArgValue);
lor::FormulaPtr code_formula(const std::string& x, ExpansionLevel level,
                             PairConvention conv = PairConvention::ArgValue);
lor::FormulaPtr pow2_formula(const std::string& p, const std::string& z,
                             ExpansionLevel level);

// Macro-expands abbreviation atoms per the level. Idempotent at a fixed
// level; at Arithmetic with expand_pow2, only =, <, +, *, -, 0, 1,
// connectives, quantifiers and N remain.
lor::FormulaPtr expand(const lor::FormulaPtr& f, ExpansionLevel level,
                       PairConvention conv = PairConvention::ArgValue);

// The Random Kripke's Schema instance for phi with monitoring sequence
// beta:
//   Ex beta [ (Ex n (beta(n) > 0) -> phi) /\
//             (~Ex n (beta(n) > 0) -> ~phi) /\
//             All k>0 (~Ex n (beta(n) = k) -> phi \/ ~phi) /\
//             All k>0 All n (beta(n) = k -> All m>=n (beta(m) = k)) ]
// beta(n) > 0 is rendered as Ex v (beta(n) = v /\ 0 < v); the guards
// k > 0 and m >= n are rendered with Lt. Throws FreeVariableClash when
// beta occurs free in phi. With no name given, a fresh one is chosen.
l1::FormulaPtr rks_instance(const l1::FormulaPtr& phi,
                            std::optional<std::string> beta = std::nullopt);

}  // namespace seqcode
