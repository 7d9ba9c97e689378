#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "asrlogic/formula.hpp"
#include "asrlogic/godel.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

using Assignment = std::map<std::string, Elem>;

/// Interprets atom-f(args) during evaluation.
using FCallback = std::function<bool(std::span<const Elem> args)>;

/// A formula resolved against one structure: variables become slots,
/// relation and constant names become table references. Evaluation is
/// reentrant; the object is immutable after construction.
class CompiledFormula {
 public:
  /// `free_order` fixes the order of values passed to eval(). Every free
  /// variable of `phi` must appear in it. Raises VocabularyError for unknown
  /// names or wrong arities.
  CompiledFormula(const Structure& m, const Formula& phi,
                  std::vector<std::string> free_order);

  /// Raises WrongEvaluatorError if atom-f is reached and `f` is null.
  bool eval(std::span<const Elem> values, const FCallback* f = nullptr) const;

  const std::vector<std::string>& free_order() const { return free_order_; }

 private:
  struct CTerm {
    bool is_slot;
    std::size_t value;
  };
  struct CNode {
    FormulaKind kind;
    const Relation* rel = nullptr;
    std::vector<CTerm> args;
    std::vector<std::size_t> children;
    std::size_t slot = 0;
  };

  std::size_t compile(const Formula& phi, std::vector<std::pair<std::string, std::size_t>>& scope);
  bool eval_node(std::size_t node, std::vector<Elem>& env,
                 const FCallback* f) const;

  const Structure* m_;
  std::vector<std::string> free_order_;
  std::vector<CNode> nodes_;
  std::size_t root_ = 0;
  std::size_t slots_ = 0;
};

/// Classical satisfaction; quantifiers range over the whole domain.
/// Raises WrongEvaluatorError if `phi` contains atom-f, VocabularyError for
/// unknown names, ValidationError when a free variable is unassigned.
bool eval_fo(const Structure& m, const Formula& phi, const Assignment& a);

/// Satisfaction for coded one-parameter formulas: decodes `code` and
/// evaluates with its single free variable bound to `a`. Raises NotACodeError
/// or ArityError (free-variable count other than one).
bool tr(const Structure& m, const GodelCode& code, Elem a);

}  // namespace asrlogic
