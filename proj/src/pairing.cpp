#include "seqcode/pairing.hpp"

#include <cmath>
#include <stdexcept>

#include "seqcode/errors.hpp"

namespace seqcode {

std::uint64_t pair(std::uint64_t m, std::uint64_t k) {
  std::uint64_t s = m + k;
  return s * (s + 1) / 2 + k + 1;
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t j) {
  if (j == 0) throw DomainError("unpair: index 0 is not in the range");
  std::uint64_t r = j - 1;  // Cantor index on the diagonal grid
  // s = largest diagonal with s(s+1)/2 <= r
  std::uint64_t s = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(r) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > r) --s;
  while ((s + 1) * (s + 2) / 2 <= r) ++s;
  std::uint64_t k = r - s * (s + 1) / 2;
  return {s - k, k};
}

std::uint64_t code_position(std::uint64_t arg, std::uint64_t val,
                            PairConvention conv) {
  return 2 * (conv == PairConvention::ArgValue ? pair(arg, val)
                                               : pair(val, arg));
}

lor::FormulaPtr pair_graph(const lor::TermPtr& m, const lor::TermPtr& k,
                           const lor::TermPtr& z) {
  using namespace lor;
  TermPtr two = add(one(), one());
  TermPtr s = add(m, k);
  TermPtr lhs = mul(two, add(z, neg(one())));
  TermPtr rhs = add(mul(s, add(s, one())), mul(two, k));
  return conj(eq(lhs, rhs), conj(is_nat(z), leq(one(), z)));
}

lor::FormulaPtr pair_formula(const std::string& m, const std::string& k,
                             const std::string& z) {
  if (m == k || m == z || k == z)
    throw DomainError("pair_formula: variable names must be distinct");
  return pair_graph(lor::var(m), lor::var(k), lor::var(z));
}

}  // namespace seqcode
