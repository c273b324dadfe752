#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "seqcode/util.hpp"

// Abstract syntax of the source language: two-sorted intuitionistic
// analysis with natural-number terms, choice-sequence application and
// the four bounded operators.
namespace seqcode::l1 {

enum class Sort { Nat, Seq };

enum class OpKind { Sum, Prod, Min, Max };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct TVar {
  std::string name;  // natural-number sort
};
struct TZero {};
struct TOne {};
struct TSucc {
  TermPtr arg;
};
struct TAdd {
  TermPtr lhs, rhs;
};
struct TMul {
  TermPtr lhs, rhs;
};
// seq(arg): a sequence variable applied to a natural term. Needed so the
// bounded-operator eliminator can write the recurrence b(S(z)) = b(z) + a(z)
// the way the defining display does; the translator flattens these back
// into seq-equation atoms before applying the clause table.
struct TSeqApp {
  std::string seq;
  TermPtr arg;
};
// sum{v < bound} seq(v) and friends. The bound variable scopes over
// nothing (the summand is exactly seq(v)) and must not occur in bound.
struct TBoundedOp {
  OpKind kind;
  std::string var;
  TermPtr bound;
  std::string seq;
};

struct Term {
  std::variant<TVar, TZero, TOne, TSucc, TAdd, TMul, TSeqApp, TBoundedOp> node;
};

TermPtr var(std::string name);
TermPtr zero();
TermPtr one();
TermPtr succ(TermPtr t);
TermPtr add(TermPtr a, TermPtr b);
TermPtr mul(TermPtr a, TermPtr b);
TermPtr seq_app(std::string seq, TermPtr arg);
TermPtr bounded_op(OpKind kind, std::string var, TermPtr bound, std::string seq);
// n as S(S(...S(0)...))
TermPtr numeral(unsigned long n);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct FEq {
  TermPtr lhs, rhs;
};
struct FLt {
  TermPtr lhs, rhs;
};
struct FSeqEq {
  std::string seq;
  TermPtr arg, value;  // seq(arg) = value
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
struct FExistsNat {
  std::string var;
  FormulaPtr body;
};
struct FForallNat {
  std::string var;
  FormulaPtr body;
};
struct FExistsSeq {
  std::string var;
  FormulaPtr body;
};
struct FForallSeq {
  std::string var;
  FormulaPtr body;
};

struct Formula {
  std::variant<FEq, FLt, FSeqEq, FAnd, FOr, FImp, FNot, FExistsNat,
               FForallNat, FExistsSeq, FForallSeq>
      node;
};

FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr lt(TermPtr a, TermPtr b);
FormulaPtr seq_eq(std::string seq, TermPtr arg, TermPtr value);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr lnot(FormulaPtr a);
FormulaPtr exists_nat(std::string v, FormulaPtr body);
FormulaPtr forall_nat(std::string v, FormulaPtr body);
FormulaPtr exists_seq(std::string v, FormulaPtr body);
FormulaPtr forall_seq(std::string v, FormulaPtr body);

FormulaPtr conj_all(const std::vector<FormulaPtr>& fs);
std::vector<FormulaPtr> conjuncts(const FormulaPtr& f);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

struct VarOcc {
  std::string name;
  Sort sort;
  auto operator<=>(const VarOcc&) const = default;
};

std::set<VarOcc> free_vars(const FormulaPtr& f);
std::set<std::string> all_names(const FormulaPtr& f);

bool contains_bounded_op(const FormulaPtr& f);
bool contains_seq_app(const FormulaPtr& f);

// First sort violation, if any: a name used at both sorts, or a binder
// whose body uses it at the other sort. `path` names the offending node.
struct SortIssue {
  std::string path;
  std::string message;
};
std::optional<SortIssue> sort_check(const FormulaPtr& f);

// Gives every binder a fresh canonical name (nat: n1, n2, ...; seq:
// c1, c2, ...) so no name is bound twice along a path. Idempotent.
FormulaPtr normalize_binders(const FormulaPtr& f);

bool binder_path_clean(const FormulaPtr& f);

// The sort a bare identifier gets when no annotation is present:
// a..h sequence, i..z natural.
std::optional<Sort> conventional_sort(const std::string& name);

}  // namespace seqcode::l1
