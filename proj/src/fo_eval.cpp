#include "asrlogic/fo_eval.hpp"

#include <algorithm>

#include "asrlogic/error.hpp"

namespace asrlogic {

CompiledFormula::CompiledFormula(const Structure& m, const Formula& phi,
                                 std::vector<std::string> free_order)
    : m_(&m), free_order_(std::move(free_order)) {
  std::vector<std::pair<std::string, std::size_t>> scope;
  for (std::size_t i = 0; i < free_order_.size(); ++i) {
    scope.emplace_back(free_order_[i], i);
  }
  slots_ = free_order_.size();
  root_ = compile(phi, scope);
}

std::size_t CompiledFormula::compile(
    const Formula& phi, std::vector<std::pair<std::string, std::size_t>>& scope) {
  CNode node;
  node.kind = phi.kind;
  for (const Term& t : phi.args) {
    switch (t.kind) {
      case Term::Kind::kVar: {
        auto it = std::find_if(scope.rbegin(), scope.rend(),
                               [&](const auto& s) { return s.first == t.name; });
        if (it == scope.rend()) {
          throw ValidationError("unassigned free variable '" + t.name + "'");
        }
        node.args.push_back({true, it->second});
        break;
      }
      case Term::Kind::kConst: {
        auto c = m_->find_constant(t.name);
        if (!c) {
          throw VocabularyError("unknown constant '" + t.name + "' in " +
                                m_->name());
        }
        node.args.push_back({false, *c});
        break;
      }
      case Term::Kind::kElem:
        if (t.elem >= m_->size()) {
          throw VocabularyError("element #" + std::to_string(t.elem) +
                                " outside the domain of " + m_->name());
        }
        node.args.push_back({false, t.elem});
        break;
    }
  }
  if (phi.kind == FormulaKind::kIn || phi.kind == FormulaKind::kRel) {
    const std::string& name = phi.kind == FormulaKind::kIn ? "in" : phi.rel;
    node.rel = m_->find_relation(name);
    if (node.rel == nullptr) {
      throw VocabularyError("unknown relation '" + name + "' in " + m_->name());
    }
    if (node.rel->arity() != phi.args.size()) {
      throw VocabularyError("relation '" + name + "' has arity " +
                            std::to_string(node.rel->arity()) + ", used with " +
                            std::to_string(phi.args.size()));
    }
  }
  if (phi.kind == FormulaKind::kExists || phi.kind == FormulaKind::kForall) {
    node.slot = slots_++;
    scope.emplace_back(phi.var, node.slot);
    node.children.push_back(compile(phi.children[0], scope));
    scope.pop_back();
  } else {
    for (const Formula& c : phi.children) {
      node.children.push_back(compile(c, scope));
    }
  }
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

bool CompiledFormula::eval(std::span<const Elem> values,
                           const FCallback* f) const {
  if (values.size() != free_order_.size()) {
    throw ValidationError("expected " + std::to_string(free_order_.size()) +
                          " value(s), got " + std::to_string(values.size()));
  }
  std::vector<Elem> env(slots_, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= m_->size()) {
      throw ValidationError("value " + std::to_string(values[i]) +
                            " outside the domain of " + m_->name());
    }
    env[i] = values[i];
  }
  return eval_node(root_, env, f);
}

bool CompiledFormula::eval_node(std::size_t index, std::vector<Elem>& env,
                                const FCallback* f) const {
  const CNode& node = nodes_[index];
  auto value = [&](const CTerm& t) { return t.is_slot ? env[t.value] : t.value; };
  switch (node.kind) {
    case FormulaKind::kEq:
      return value(node.args[0]) == value(node.args[1]);
    case FormulaKind::kIn:
      if (node.args.size() == 2) {
        return node.rel->holds2(value(node.args[0]), value(node.args[1]));
      }
      [[fallthrough]];
    case FormulaKind::kRel: {
      Elem buffer[8];
      if (node.args.size() <= 8) {
        for (std::size_t i = 0; i < node.args.size(); ++i) buffer[i] = value(node.args[i]);
        return node.rel->holds(std::span<const Elem>(buffer, node.args.size()));
      }
      std::vector<Elem> args;
      for (const CTerm& t : node.args) args.push_back(value(t));
      return node.rel->holds(args);
    }
    case FormulaKind::kF: {
      if (f == nullptr) {
        throw WrongEvaluatorError(
            "atom-f reached a plain first-order evaluator");
      }
      std::vector<Elem> args;
      for (const CTerm& t : node.args) args.push_back(value(t));
      return (*f)(args);
    }
    case FormulaKind::kNot:
      return !eval_node(node.children[0], env, f);
    case FormulaKind::kAnd:
      for (std::size_t c : node.children) {
        if (!eval_node(c, env, f)) return false;
      }
      return true;
    case FormulaKind::kOr:
      for (std::size_t c : node.children) {
        if (eval_node(c, env, f)) return true;
      }
      return false;
    case FormulaKind::kImplies:
      return !eval_node(node.children[0], env, f) ||
             eval_node(node.children[1], env, f);
    case FormulaKind::kExists:
      for (Elem e = 0; e < m_->size(); ++e) {
        env[node.slot] = e;
        if (eval_node(node.children[0], env, f)) return true;
      }
      return false;
    case FormulaKind::kForall:
      for (Elem e = 0; e < m_->size(); ++e) {
        env[node.slot] = e;
        if (!eval_node(node.children[0], env, f)) return false;
      }
      return true;
  }
  return false;
}

bool eval_fo(const Structure& m, const Formula& phi, const Assignment& a) {
  if (contains_f(phi)) {
    throw WrongEvaluatorError(
        "formula contains atom-f; use the almost self-referential evaluator");
  }
  std::vector<std::string> names;
  std::vector<Elem> values;
  for (const auto& [name, e] : a) {
    names.push_back(name);
    values.push_back(e);
  }
  CompiledFormula compiled(m, phi, names);
  return compiled.eval(values);
}

bool tr(const Structure& m, const GodelCode& code, Elem a) {
  Formula phi = godel_decode(code);
  std::set<std::string> free = free_variables(phi);
  if (free.size() != 1) {
    throw ArityError("Tr expects a one-parameter formula, code " +
                     code.to_string() + " has " + std::to_string(free.size()) +
                     " free variable(s)");
  }
  return eval_fo(m, phi, {{*free.begin(), a}});
}

}  // namespace asrlogic
