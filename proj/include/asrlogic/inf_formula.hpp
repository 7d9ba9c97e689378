#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "asrlogic/formula.hpp"

namespace asrlogic {

enum class InfKind { kAtom, kNot, kConj, kDisj, kExists, kForall, kFalsum, kVerum };

struct InfNode;

/// Handle to an immutable infinitary formula node. Subtrees may be shared
/// (the formula is a DAG); rank and free variables follow tree semantics.
class InfFormula {
 public:
  static InfFormula atom(Formula a);  // in, =, or rel
  static InfFormula negation(InfFormula a);
  /// Empty conj is verum; empty disj is falsum.
  static InfFormula conj(std::vector<InfFormula> cs);
  static InfFormula disj(std::vector<InfFormula> cs);
  static InfFormula exists(std::string v, InfFormula body);
  static InfFormula forall(std::string v, InfFormula body);
  static InfFormula falsum();
  static InfFormula verum();

  InfKind kind() const;
  const Formula& atom_formula() const;
  const std::vector<InfFormula>& children() const;
  const std::string& var() const;
  /// Height: atoms, falsum, verum 0; other nodes 1 + max child rank.
  std::size_t rank() const;
  /// Sorted free variable names.
  const std::vector<std::string>& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  const InfNode* id() const { return node_.get(); }

  /// Number of distinct nodes in the DAG.
  std::size_t dag_size() const;

 private:
  explicit InfFormula(std::shared_ptr<const InfNode> node)
      : node_(std::move(node)) {}
  static InfFormula make(InfNode node);

  std::shared_ptr<const InfNode> node_;
};

struct InfNode {
  InfKind kind = InfKind::kVerum;
  Formula atom;
  std::vector<InfFormula> children;
  std::string var;
  std::size_t rank = 0;
  std::vector<std::string> free;
};

std::size_t inf_rank(const InfFormula& psi);

/// Translation of an f-free formula; implies becomes disj{not a, b}.
/// Raises WrongEvaluatorError if atom-f occurs.
InfFormula to_inf(const Formula& phi);

/// Indented text form. Nodes reachable along more than one path are printed
/// once as "@N := ..." definitions (post-order) and referenced as @N.
std::string print_inf(const InfFormula& psi);

}  // namespace asrlogic
