#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "seqcode/util.hpp"

// Abstract syntax of the target language: first-order ordered rings
// (=, <, +, *, -, 0, 1) plus named abbreviation atoms that the coding
// layer can macro-expand. N stays primitive throughout.
namespace seqcode::lor {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct TVar {
  std::string name;
};
struct TZero {};
struct TOne {};
struct TNeg {
  TermPtr arg;
};
struct TAdd {
  TermPtr lhs, rhs;
};
struct TMul {
  TermPtr lhs, rhs;
};

struct Term {
  std::variant<TVar, TZero, TOne, TNeg, TAdd, TMul> node;
};

TermPtr var(std::string name);
TermPtr zero();
TermPtr one();
TermPtr neg(TermPtr t);
TermPtr add(TermPtr a, TermPtr b);
TermPtr mul(TermPtr a, TermPtr b);
// n rendered with binary structure: 4 = (1+1)*(1+1), 5 = (1+1)*(1+1)+1.
TermPtr numeral(unsigned long n);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct FEq {
  TermPtr lhs, rhs;
};
struct FLt {
  TermPtr lhs, rhs;
};
struct FAnd {
  FormulaPtr lhs, rhs;
};
struct FOr {
  FormulaPtr lhs, rhs;
};
struct FImp {
  FormulaPtr lhs, rhs;
};
struct FNot {
  FormulaPtr arg;
};
struct FExists {
  std::string var;
  FormulaPtr body;
};
struct FForall {
  std::string var;
  FormulaPtr body;
};
struct FExistsUnique {
  std::string var;
  FormulaPtr body;
};

// Abbreviation atoms. Each except FNat expands to pure ordered-ring
// syntax (see coding.hpp); FNat is the primitive predicate N.
struct FNat {
  TermPtr arg;
};
struct FPow2 {
  TermPtr p, z;  // z = 2^p
};
struct FPairEq {
  TermPtr m, k, z;  // z = <m,k>
};
struct FPRational {
  TermPtr y, p;
};
struct FBracket {
  TermPtr x, p;  // [x,p]
};
struct FCAtom {
  TermPtr x, k, m;  // C(x,k,m)
};
struct FCode {
  TermPtr x;  // CODE(x)
};
struct FIn01 {
  TermPtr x;
};

struct Formula {
  std::variant<FEq, FLt, FAnd, FOr, FImp, FNot, FExists, FForall,
               FExistsUnique, FNat, FPow2, FPairEq, FPRational, FBracket,
               FCAtom, FCode, FIn01>
      node;
};

FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr lt(TermPtr a, TermPtr b);
FormulaPtr leq(TermPtr a, TermPtr b);  // a < b \/ a = b
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr lnot(FormulaPtr a);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists_unique(std::string v, FormulaPtr body);
FormulaPtr is_nat(TermPtr t);
FormulaPtr pow2eq(TermPtr p, TermPtr z);
FormulaPtr paireq(TermPtr m, TermPtr k, TermPtr z);
FormulaPtr prat(TermPtr y, TermPtr p);
FormulaPtr bracket(TermPtr x, TermPtr p);
FormulaPtr catom(TermPtr x, TermPtr k, TermPtr m);
FormulaPtr code(TermPtr x);
FormulaPtr in01(TermPtr x);

// Right-nested conjunction of one or more conjuncts.
FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);
// Flattens a right- or left-nested conjunction spine.
std::vector<FormulaPtr> conjuncts(const FormulaPtr& f);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const FormulaPtr& f);
std::set<std::string> free_vars(const TermPtr& t);
// Every identifier occurring anywhere, bound or free.
std::set<std::string> all_names(const FormulaPtr& f);

// Capture-avoiding substitution of a term for a free variable.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v,
                      const TermPtr& replacement);
TermPtr substitute(const TermPtr& t, const std::string& v,
                   const TermPtr& replacement);

// True when no abbreviation atom other than N remains.
bool abbreviation_free_except_n(const FormulaPtr& f);
// True when some Pow2 atom remains.
bool contains_pow2(const FormulaPtr& f);

// No name bound twice along a binder path and no binder reuses a name
// that occurs free in the whole formula.
bool binder_path_clean(const FormulaPtr& f);

}  // namespace seqcode::lor
