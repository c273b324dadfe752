#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqcode/pairing.hpp"
#include "seqcode/rational.hpp"

// Exact-arithmetic kernel: code bits, code reals as refinable dyadic
// enclosures, the bracket predicate, and the brute-force lemma oracles.
namespace seqcode {

enum class Tri { False, True, Undecided };

// A finitely presented choice sequence: explicit prefix, then a constant
// tail. Total, and each value is O(1) to look up.
struct SeqRule {
  std::vector<std::uint64_t> prefix;
  std::uint64_t tail = 0;

  std::uint64_t at(std::uint64_t m) const {
    return m < prefix.size() ? prefix[m] : tail;
  }
  bool operator==(const SeqRule&) const = default;
  // True when both rules denote the same total function.
  bool same_function(const SeqRule& other) const;
};

// "prefix=1,2,3;tail=0" (prefix may be empty: "tail=2" or "prefix=;tail=2").
SeqRule rule_from_string(const std::string& text);
std::string rule_to_string(const SeqRule& rule);

// Total bit function i >= 1 satisfying the coding conditions: odd bits
// follow the 0,1 pattern at 4m+1 / 4m+3; even bits carry either a rule's
// graph through the pairing function or an explicit finite support set.
class CodeBits {
public:
  static CodeBits from_rule(SeqRule rule,
                            PairConvention conv = PairConvention::ArgValue);
  static CodeBits from_evens(std::set<std::uint64_t> evens);

  int bit(std::uint64_t i) const;  // i >= 1
  const std::optional<SeqRule>& rule() const { return rule_; }
  const std::set<std::uint64_t>& evens() const { return evens_; }
  PairConvention convention() const { return conv_; }

private:
  CodeBits() = default;
  std::optional<SeqRule> rule_;
  std::set<std::uint64_t> evens_;
  PairConvention conv_ = PairConvention::ArgValue;
};

// [lo, lo + 2^-bits] with lo = lo_num / 2^bits; the coded real always
// lies inside, and refining never leaves the current interval.
struct DyadicEnclosure {
  Integer lo_num;
  unsigned long bits = 0;

  Rational lo() const { return Rational(lo_num) * pow2_inv(bits); }
  Rational hi() const { return Rational(lo_num + 1) * pow2_inv(bits); }
  Rational width() const { return pow2_inv(bits); }
  bool contains(const Rational& x) const { return lo() <= x && x <= hi(); }
  std::string to_string() const;  // "a/2^B + [0,2^-B]"
};

int code_bit(const SeqRule& rule, std::uint64_t i,
             PairConvention conv = PairConvention::ArgValue);

DyadicEnclosure enclosure_of(const CodeBits& bits, unsigned long precision);
DyadicEnclosure encode_real(const SeqRule& rule, unsigned long precision,
                            PairConvention conv = PairConvention::ArgValue);

// The exact real with the given even bits set plus the odd pattern:
// sum of 2^-i over evens, plus 2/15.
Rational exact_pattern_value(const std::set<std::uint64_t>& evens);

// [x,p] for exact rational x: an integer q with 0 < x*2^(p-1) - q < 1/2
// exists iff frac(x*2^(p-1)) lies strictly inside (0, 1/2). p >= 1.
bool bracket_eval_exact(const Rational& x, unsigned long p);

struct EnclosureDecision {
  Tri value = Tri::Undecided;
  unsigned long bits_used = 0;
};

// [x,p] for a coded real known only through its bits. Refines until the
// image of frac(x*2^(p-1)) clears the boundary, or max_bits is reached.
EnclosureDecision bracket_eval_enclosure(const CodeBits& bits,
                                         unsigned long p,
                                         unsigned long max_bits);

struct DecodeResult {
  enum class Kind { Value, Undetermined, Duplicate } kind;
  std::uint64_t value = 0;        // for Value
  std::uint64_t first = 0, second = 0;  // for Duplicate
};

// The unique k <= kmax with bit(2<m,k>) = 1, if any. Two distinct hits
// mean the bits do not satisfy CODE.
DecodeResult decode(const CodeBits& bits, std::uint64_t m, std::uint64_t kmax);

// Decides the unbounded odd-bit pattern for a rational exactly, using
// the eventual periodicity of its binary expansion.
bool verify_odd_pattern(const Rational& x);

struct LemmaReport {
  // both sides of the bit-vs-bracket equivalence at p
  bool bit_side = false;
  bool bracket_side = false;
  bool agree = false;
  // truncation facts, meaningful when bit(p) = 0
  bool truncation_applicable = false;
  bool truncation_ok = false;
  // x never p-rational for p <= 64
  bool never_p_rational = true;
};

LemmaReport lemma_oracles(const std::set<std::uint64_t>& evens,
                          unsigned long p);

// A real-number-generator prefix xi(1..L).
struct GeneratorPrefix {
  std::vector<Integer> values;  // values[i-1] = xi(i)

  std::uint64_t length() const { return values.size(); }
  const Integer& at(std::uint64_t x) const;  // x in [1, length]
};

GeneratorPrefix nat_generator(std::uint64_t n, std::uint64_t len);
GeneratorPrefix real_from_01seq(const std::vector<int>& eta);
GeneratorPrefix generator_from_bits(const CodeBits& bits, std::uint64_t len);

struct VesleyViolation {
  std::uint64_t k = 0, p = 0;
};

struct VesleyReport {
  std::vector<VesleyViolation> violations;
  std::uint64_t checks = 0;
  bool ok() const { return violations.empty(); }
};

// Takes witness x = k and tests 2^k |2^p xi(x) - xi(x+p)| < 2^(x+p)
// for every p with x+p within the prefix, for each k in [1, bound].
VesleyReport vesley_check(const GeneratorPrefix& xi, std::uint64_t bound);

struct SeparationResult {
  enum class Kind { Separated, NoDifferenceFound } kind;
  std::uint64_t first_diff_bit = 0;
  Rational gap;            // proven lower bound on |x1 - x2|
  unsigned long bits = 0;  // precision at which enclosures are disjoint
};

SeparationResult separation(const SeqRule& r1, const SeqRule& r2,
                            PairConvention conv = PairConvention::ArgValue);

}  // namespace seqcode
