#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "seqcode/coding.hpp"
#include "seqcode/lor_ast.hpp"
#include "seqcode/numerics.hpp"

// Bounded evaluation of LOR formulas over exact rationals and coded
// reals. Everything is three-valued: True/False mean decided within the
// budget (quantifier ranges and enclosure precision), Undecided means
// the budget ran out first.
//
// Quantifier handling: existential blocks are solved by constraint
// propagation (functional atoms like Pow2/PairEq and one-unknown linear
// equations determine variables; interval narrowing over the linear
// atoms bounds the rest), falling back to enumeration of N-guarded
// variables up to exists_nat_bound plus any caller-supplied witnesses.
// Universal quantifiers must be N-guarded and are enumerated up to
// forall_nat_bound. Universal quantification over reals is out of
// scope and evaluates to Undecided.
namespace seqcode {

struct EvalBudget {
  unsigned long forall_nat_bound = 16;
  unsigned long exists_nat_bound = 64;
  unsigned long max_bits = 256;
  // Extra candidate values tried for existential variables that cannot
  // be determined or narrowed (e.g. Goedel beta-function witnesses).
  std::vector<Rational> witness_pool;
  PairConvention convention = PairConvention::ArgValue;
};

// A coded real known through its bits; the enclosure cache is shared
// and only ever refined.
class CodeRealValue {
public:
  explicit CodeRealValue(CodeBits bits)
      : bits_(std::move(bits)), enc_(enclosure_of(bits_, 16)) {}

  const CodeBits& bits() const { return bits_; }
  const DyadicEnclosure& enclosure() const { return enc_; }
  // Refines the cached enclosure to at least `precision` bits.
  void refine_to(unsigned long precision) {
    if (precision > enc_.bits) enc_ = enclosure_of(bits_, precision);
  }

private:
  CodeBits bits_;
  DyadicEnclosure enc_;
};

using CodeRealPtr = std::shared_ptr<CodeRealValue>;
using Value = std::variant<Rational, CodeRealPtr>;
using Env = std::map<std::string, Value>;

Value exact_value(const Rational& x);
Value exact_value(long n);
Value code_real_value(CodeBits bits);

Tri eval_lor(const lor::FormulaPtr& f, const Env& env,
             const EvalBudget& budget);

}  // namespace seqcode
