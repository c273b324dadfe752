#pragma once

#include <cstdint>
#include <utility>

#include "seqcode/lor_ast.hpp"

namespace seqcode {

// Shifted Cantor pairing: a bijection from pairs of naturals onto the
// naturals >= 1, so every coded bit position 2<m,k> lands at index >= 2.
//
//   pair(m,k) = (m+k)(m+k+1)/2 + k + 1

std::uint64_t pair(std::uint64_t m, std::uint64_t k);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t j);  // j >= 1

// Which slot of <.,.> carries the sequence argument and which the value.
// The coding reads <argument, value> by default; the alternative order
// matches the display that writes <k,m> for the atom with argument k.
enum class PairConvention { ArgValue, ValueArg };

// Bit position of the statement "rule(arg) = val" under a convention.
std::uint64_t code_position(std::uint64_t arg, std::uint64_t val,
                            PairConvention conv);

// The graph of the pairing function as arithmetic, relativized to N:
//   2*(z - 1) = (m+k)*(m+k+1) + 2*k  /\  N(z)  /\  1 <= z
// No exponentiation is needed; the three variable names must differ.
lor::FormulaPtr pair_formula(const std::string& m, const std::string& k,
                             const std::string& z);

// Same graph over arbitrary terms; used by the macro expander.
lor::FormulaPtr pair_graph(const lor::TermPtr& m, const lor::TermPtr& k,
                           const lor::TermPtr& z);

}  // namespace seqcode
