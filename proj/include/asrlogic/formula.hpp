#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace asrlogic {

/// A term is a variable, a structure constant, or a literal domain element
/// (written #N; produced by the census and by unfolding).
struct Term {
  enum class Kind { kVar, kConst, kElem };

  Kind kind = Kind::kVar;
  std::string name;      // kVar, kConst
  std::size_t elem = 0;  // kElem

  static Term var(std::string n) { return {Kind::kVar, std::move(n), 0}; }
  static Term constant(std::string n) {
    return {Kind::kConst, std::move(n), 0};
  }
  static Term element(std::size_t e) { return {Kind::kElem, {}, e}; }

  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

enum class FormulaKind {
  kIn,       // (in s t)
  kEq,       // (= s t)
  kRel,      // (rel NAME t...)
  kF,        // (f t...), the self-reference predicate
  kNot,
  kAnd,      // n-ary; (and) is true
  kOr,       // n-ary; (or) is false
  kImplies,
  kExists,
  kForall,
};

/// First-order formula AST with the special predicate f. Value type.
struct Formula {
  FormulaKind kind = FormulaKind::kAnd;
  std::string rel;                // kRel: relation name
  std::vector<Term> args;         // atoms
  std::string var;                // quantifiers: bound variable
  std::vector<Formula> children;  // connectives and quantifier body

  static Formula in(Term a, Term b);
  static Formula eq(Term a, Term b);
  static Formula relation(std::string name, std::vector<Term> args);
  static Formula f(std::vector<Term> args);
  static Formula negation(Formula a);
  static Formula conj(std::vector<Formula> cs);
  static Formula disj(std::vector<Formula> cs);
  static Formula implies(Formula a, Formula b);
  static Formula exists(std::string v, Formula body);
  static Formula forall(std::string v, Formula body);

  bool is_atom() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Number of AST nodes; terms are not counted.
std::size_t ast_size(const Formula& phi);

/// Tree height: atoms 0, every connective/quantifier 1 + max child height.
std::size_t formula_height(const Formula& phi);

std::set<std::string> free_variables(const Formula& phi);

bool contains_f(const Formula& phi);

/// Replaces free occurrences of variable `v` by `t`. The substituted term is
/// closed (a constant or element) or a variable not captured in practice;
/// binders of `v` stop the substitution.
Formula substitute(const Formula& phi, const std::string& v, const Term& t);

/// One relation spec R_i: a formula whose designated arguments `lower` and
/// `upper` read R(lower, upper) as "lower is R-below upper".
struct RelationSpec {
  std::string lower;
  std::string upper;
  Formula body;

  friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

/// An almost self-referential package: parameters x_1..x_k, the formula
/// proper, and one relation spec per parameter. Coordinate k (the last) is
/// the most significant in the lexicographic guard.
struct AsrDocument {
  std::vector<std::string> consts;
  std::vector<std::string> params;
  Formula phi;
  std::vector<RelationSpec> wf;

  std::size_t k() const { return params.size(); }

  friend bool operator==(const AsrDocument&, const AsrDocument&) = default;
};

/// Outcome of static checks on an AsrDocument.
struct ValidationReport {
  bool accepted = true;
  std::vector<std::string> violations;
  /// For k > 1: relation indices (0-based) whose spec calls f and therefore
  /// runs under the lexicographic guard.
  std::vector<std::size_t> lex_guard_relations;
};

ValidationReport validate_asr(const AsrDocument& d);

}  // namespace asrlogic
