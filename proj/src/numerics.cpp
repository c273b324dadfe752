#include "seqcode/numerics.hpp"

#include <algorithm>
#include <sstream>

#include "seqcode/errors.hpp"

namespace seqcode {

bool SeqRule::same_function(const SeqRule& other) const {
  std::uint64_t n = std::max(prefix.size(), other.prefix.size());
  for (std::uint64_t m = 0; m < n; ++m)
    if (at(m) != other.at(m)) return false;
  return tail == other.tail;
}

SeqRule rule_from_string(const std::string& text) {
  SeqRule rule;
  bool have_tail = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw DomainError("rule: expected key=value in '" + part + "'");
    std::string key = part.substr(0, eq);
    std::string val = part.substr(eq + 1);
    if (key == "prefix") {
      if (val.empty()) continue;
      std::stringstream vs(val);
      std::string item;
      while (std::getline(vs, item, ','))
        rule.prefix.push_back(std::stoull(item));
    } else if (key == "tail") {
      rule.tail = std::stoull(val);
      have_tail = true;
    } else {
      throw DomainError("rule: unknown key '" + key + "'");
    }
  }
  if (!have_tail) throw DomainError("rule: missing tail value");
  return rule;
}

std::string rule_to_string(const SeqRule& rule) {
  std::string out = "prefix=";
  for (std::size_t i = 0; i < rule.prefix.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rule.prefix[i]);
  }
  out += ";tail=" + std::to_string(rule.tail);
  return out;
}

CodeBits CodeBits::from_rule(SeqRule rule, PairConvention conv) {
  CodeBits b;
  b.rule_ = std::move(rule);
  b.conv_ = conv;
  return b;
}

CodeBits CodeBits::from_evens(std::set<std::uint64_t> evens) {
  for (auto i : evens)
    if (i == 0 || i % 2 != 0)
      throw DomainError("even support set contains odd position " +
                        std::to_string(i));
  CodeBits b;
  b.evens_ = std::move(evens);
  return b;
}

int CodeBits::bit(std::uint64_t i) const {
  if (i == 0) throw DomainError("code bits are indexed from 1");
  if (i % 2 == 1) return (i % 4 == 3) ? 1 : 0;
  if (rule_) {
    auto [a, b] = unpair(i / 2);
    if (conv_ == PairConvention::ArgValue) return rule_->at(a) == b ? 1 : 0;
    return rule_->at(b) == a ? 1 : 0;
  }
  return evens_.count(i) ? 1 : 0;
}

int code_bit(const SeqRule& rule, std::uint64_t i, PairConvention conv) {
  return CodeBits::from_rule(rule, conv).bit(i);
}

std::string DyadicEnclosure::to_string() const {
  return lo_num.get_str() + "/2^" + std::to_string(bits) + " + [0,2^-" +
         std::to_string(bits) + "]";
}

DyadicEnclosure enclosure_of(const CodeBits& bits, unsigned long precision) {
  Integer a = 0;
  for (unsigned long i = 1; i <= precision; ++i) {
    a <<= 1;
    if (bits.bit(i)) a |= 1;
  }
  return DyadicEnclosure{a, precision};
}

DyadicEnclosure encode_real(const SeqRule& rule, unsigned long precision,
                            PairConvention conv) {
  return enclosure_of(CodeBits::from_rule(rule, conv), precision);
}

Rational exact_pattern_value(const std::set<std::uint64_t>& evens) {
  for (auto i : evens)
    if (i == 0 || i % 2 != 0)
      throw DomainError("even support set contains odd position " +
                        std::to_string(i));
  // odd pattern contributes sum over m of 2^-(4m+3) = 2/15
  Rational x = rat(2, 15);
  for (auto i : evens) x += pow2_inv(i);
  x.canonicalize();
  return x;
}

bool bracket_eval_exact(const Rational& x, unsigned long p) {
  if (p == 0) throw DomainError("[x,p] needs p >= 1");
  Rational f = frac_part(x * pow2(p - 1));
  return sgn(f) > 0 && f < rat(1, 2);
}

EnclosureDecision bracket_eval_enclosure(const CodeBits& bits,
                                         unsigned long p,
                                         unsigned long max_bits) {
  if (p == 0) throw DomainError("[x,p] needs p >= 1");
  unsigned long precision = std::min(max_bits, p + 8);
  const Rational half = rat(1, 2);
  for (;;) {
    DyadicEnclosure enc = enclosure_of(bits, precision);
    Rational scale = pow2(p - 1);
    Rational tl = enc.lo() * scale;
    Rational th = enc.hi() * scale;
    Integer fl = rat_floor(tl);
    if (rat_floor(th) == fl) {
      Rational frl = tl - Rational(fl);
      Rational frh = th - Rational(fl);
      if (sgn(frl) > 0 && frh < half) return {Tri::True, precision};
      if (frl >= half) return {Tri::False, precision};
      // frl = 0 or the interval straddles 1/2: refine. A coded real is
      // never p-rational, so the boundary cases shrink away.
    }
    if (precision >= max_bits) return {Tri::Undecided, precision};
    precision = std::min(max_bits, precision * 2);
  }
}

DecodeResult decode(const CodeBits& bits, std::uint64_t m,
                    std::uint64_t kmax) {
  if (kmax < 1) throw DomainError("decode: search bound must be >= 1");
  bool found = false;
  std::uint64_t value = 0;
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    std::uint64_t pos = code_position(m, k, bits.convention());
    if (bits.bit(pos) == 1) {
      if (found) return {DecodeResult::Kind::Duplicate, 0, value, k};
      found = true;
      value = k;
    }
  }
  if (!found) return {DecodeResult::Kind::Undetermined, 0, 0, 0};
  return {DecodeResult::Kind::Value, value, 0, 0};
}

namespace {

// multiplicative order of 2 modulo odd d (d >= 1); order 1 for d = 1
std::uint64_t mult_order_2(const Integer& d) {
  if (d == 1) return 1;
  Integer r = 2 % d;
  std::uint64_t t = 1;
  while (r != 1) {
    r = (r * 2) % d;
    ++t;
  }
  return t;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::__gcd(a, b);
  return a / g * b;
}

}  // namespace

bool verify_odd_pattern(const Rational& x) {
  if (sgn(x) < 0 || x > 1) return false;
  // split denominator into 2^s * d' with d' odd
  Integer den = x.get_den();
  unsigned long s = mpz_scan1(den.get_mpz_t(), 0);
  Integer odd_part = den >> s;
  std::uint64_t period = mult_order_2(odd_part);
  // bits beyond position s repeat with this period; the pattern
  // constraints repeat mod 4, so one combined cycle decides all of them
  std::uint64_t window = s + lcm_u64(period, 4) + 4;
  for (std::uint64_t i = 1; i <= window; i += 2) {
    int b = bit_at(x, i);
    int want = (i % 4 == 3) ? 1 : 0;
    if (b != want) return false;
  }
  return true;
}

LemmaReport lemma_oracles(const std::set<std::uint64_t>& evens,
                          unsigned long p) {
  if (p == 0) throw DomainError("lemma oracles need p >= 1");
  CodeBits bits = CodeBits::from_evens(evens);
  Rational x = exact_pattern_value(evens);

  LemmaReport rep;
  // bit level: the odd pattern holds by construction here, so the left
  // side reduces to bit(p) = 0
  rep.bit_side = bits.bit(p) == 0;
  // real level, computed from x alone
  rep.bracket_side = verify_odd_pattern(x) && bracket_eval_exact(x, p);
  rep.agree = rep.bit_side == rep.bracket_side;

  if (bits.bit(p) == 0) {
    rep.truncation_applicable = true;
    Rational xp = rat(0);
    for (unsigned long i = 1; i < p; ++i)
      if (bits.bit(i)) xp += pow2_inv(i);
    Rational diff = x - xp;
    rep.truncation_ok =
        is_p_rational(xp, p - 1) && sgn(diff) > 0 && diff < pow2_inv(p);
  }

  for (unsigned long q = 1; q <= 64; ++q)
    if (is_p_rational(x, q)) {
      rep.never_p_rational = false;
      break;
    }
  return rep;
}

const Integer& GeneratorPrefix::at(std::uint64_t x) const {
  if (x < 1 || x > values.size())
    throw DomainError("generator prefix too short for index " +
                      std::to_string(x));
  return values[x - 1];
}

GeneratorPrefix nat_generator(std::uint64_t n, std::uint64_t len) {
  GeneratorPrefix g;
  g.values.reserve(len);
  Integer v = n;
  for (std::uint64_t l = 1; l <= len; ++l) {
    v <<= 1;  // n * 2^l
    g.values.push_back(v);
  }
  return g;
}

GeneratorPrefix real_from_01seq(const std::vector<int>& eta) {
  GeneratorPrefix g;
  g.values.reserve(eta.size());
  Integer v = 0;
  for (int b : eta) {
    if (b != 0 && b != 1)
      throw DomainError("0-1 sequence entry out of range: " +
                        std::to_string(b));
    v = v * 2 + b;
    g.values.push_back(v);
  }
  return g;
}

GeneratorPrefix generator_from_bits(const CodeBits& bits, std::uint64_t len) {
  std::vector<int> eta;
  eta.reserve(len);
  for (std::uint64_t i = 1; i <= len; ++i) eta.push_back(bits.bit(i));
  return real_from_01seq(eta);
}

VesleyReport vesley_check(const GeneratorPrefix& xi, std::uint64_t bound) {
  VesleyReport rep;
  if (bound >= xi.length())
    throw DomainError("generator prefix too short for bound " +
                      std::to_string(bound));
  for (std::uint64_t k = 1; k <= bound; ++k) {
    std::uint64_t x = k;  // the paper's witness
    Integer scale_k;
    mpz_ui_pow_ui(scale_k.get_mpz_t(), 2, k);
    for (std::uint64_t p = 1; x + p <= xi.length(); ++p) {
      Integer lhs = xi.at(x);
      lhs <<= p;  // 2^p xi(x)
      lhs -= xi.at(x + p);
      lhs = abs(lhs);
      lhs *= scale_k;
      Integer rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), 2, x + p);
      ++rep.checks;
      if (lhs >= rhs) rep.violations.push_back({k, p});
    }
  }
  return rep;
}

SeparationResult separation(const SeqRule& r1, const SeqRule& r2,
                            PairConvention conv) {
  if (r1.same_function(r2))
    return {SeparationResult::Kind::NoDifferenceFound, 0, rat(0), 0};

  auto position = [&](std::uint64_t m, std::uint64_t v) {
    return code_position(m, v, conv);
  };
  std::uint64_t maxlen = std::max(r1.prefix.size(), r2.prefix.size());
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t m = 0;; ++m) {
    // positions only grow once pair(m,0) passes the best candidate
    if (m > maxlen && 2 * pair(m, 0) > best) break;
    if (r1.at(m) != r2.at(m)) {
      best = std::min(best, position(m, r1.at(m)));
      best = std::min(best, position(m, r2.at(m)));
    }
    if (m > (1u << 20))
      throw DomainError("separation scan exceeded its window");
  }

  std::uint64_t i = best;
  std::uint64_t n0 = i + 1;
  while (n0 % 4 != 1) ++n0;
  Rational gap = pow2_inv(n0);

  unsigned long precision = static_cast<unsigned long>(n0 + 2);
  CodeBits b1 = CodeBits::from_rule(r1, conv);
  CodeBits b2 = CodeBits::from_rule(r2, conv);
  for (;;) {
    DyadicEnclosure e1 = enclosure_of(b1, precision);
    DyadicEnclosure e2 = enclosure_of(b2, precision);
    if (e1.hi() < e2.lo() || e2.hi() < e1.lo()) break;
    precision *= 2;
    if (precision > (1u << 16))
      throw DomainError("separation failed to split enclosures");
  }
  return {SeparationResult::Kind::Separated, i, gap, precision};
}

}  // namespace seqcode
