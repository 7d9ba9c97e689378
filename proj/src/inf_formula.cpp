#include "asrlogic/inf_formula.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "asrlogic/error.hpp"
#include "asrlogic/parser.hpp"

namespace asrlogic {

InfFormula InfFormula::make(InfNode node) {
  std::set<std::string> free;
  if (node.kind == InfKind::kAtom) {
    for (const std::string& v : free_variables(node.atom)) free.insert(v);
  }
  for (const InfFormula& c : node.children) {
    node.rank = std::max(node.rank, c.rank() + 1);
    for (const std::string& v : c.free_vars()) free.insert(v);
  }
  if (node.kind == InfKind::kExists || node.kind == InfKind::kForall) {
    free.erase(node.var);
  }
  node.free.assign(free.begin(), free.end());
  return InfFormula(std::make_shared<const InfNode>(std::move(node)));
}

InfFormula InfFormula::atom(Formula a) {
  if (a.kind != FormulaKind::kIn && a.kind != FormulaKind::kEq &&
      a.kind != FormulaKind::kRel) {
    throw WrongEvaluatorError("infinitary atoms are in, = or rel");
  }
  InfNode n;
  n.kind = InfKind::kAtom;
  n.atom = std::move(a);
  return make(std::move(n));
}

InfFormula InfFormula::negation(InfFormula a) {
  InfNode n;
  n.kind = InfKind::kNot;
  n.children.push_back(std::move(a));
  return make(std::move(n));
}

InfFormula InfFormula::conj(std::vector<InfFormula> cs) {
  if (cs.empty()) return verum();
  InfNode n;
  n.kind = InfKind::kConj;
  n.children = std::move(cs);
  return make(std::move(n));
}

InfFormula InfFormula::disj(std::vector<InfFormula> cs) {
  if (cs.empty()) return falsum();
  InfNode n;
  n.kind = InfKind::kDisj;
  n.children = std::move(cs);
  return make(std::move(n));
}

InfFormula InfFormula::exists(std::string v, InfFormula body) {
  InfNode n;
  n.kind = InfKind::kExists;
  n.var = std::move(v);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

InfFormula InfFormula::forall(std::string v, InfFormula body) {
  InfNode n;
  n.kind = InfKind::kForall;
  n.var = std::move(v);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

InfFormula InfFormula::falsum() {
  static const InfFormula kFalsum = [] {
    InfNode n;
    n.kind = InfKind::kFalsum;
    return make(std::move(n));
  }();
  return kFalsum;
}

InfFormula InfFormula::verum() {
  static const InfFormula kVerum = [] {
    InfNode n;
    n.kind = InfKind::kVerum;
    return make(std::move(n));
  }();
  return kVerum;
}

InfKind InfFormula::kind() const { return node_->kind; }
const Formula& InfFormula::atom_formula() const { return node_->atom; }
const std::vector<InfFormula>& InfFormula::children() const {
  return node_->children;
}
const std::string& InfFormula::var() const { return node_->var; }
std::size_t InfFormula::rank() const { return node_->rank; }
const std::vector<std::string>& InfFormula::free_vars() const {
  return node_->free;
}

std::size_t InfFormula::dag_size() const {
  std::unordered_set<const InfNode*> seen;
  std::vector<const InfFormula*> stack{this};
  while (!stack.empty()) {
    const InfFormula* f = stack.back();
    stack.pop_back();
    if (!seen.insert(f->id()).second) continue;
    for (const InfFormula& c : f->children()) stack.push_back(&c);
  }
  return seen.size();
}

std::size_t inf_rank(const InfFormula& psi) { return psi.rank(); }

InfFormula to_inf(const Formula& phi) {
  std::vector<InfFormula> cs;
  for (const Formula& c : phi.children) cs.push_back(to_inf(c));
  switch (phi.kind) {
    case FormulaKind::kIn:
    case FormulaKind::kEq:
    case FormulaKind::kRel:
      return InfFormula::atom(phi);
    case FormulaKind::kF:
      throw WrongEvaluatorError("atom-f has no infinitary translation");
    case FormulaKind::kNot:
      return InfFormula::negation(cs[0]);
    case FormulaKind::kAnd:
      return InfFormula::conj(std::move(cs));
    case FormulaKind::kOr:
      return InfFormula::disj(std::move(cs));
    case FormulaKind::kImplies:
      return InfFormula::disj({InfFormula::negation(cs[0]), cs[1]});
    case FormulaKind::kExists:
      return InfFormula::exists(phi.var, cs[0]);
    case FormulaKind::kForall:
      return InfFormula::forall(phi.var, cs[0]);
  }
  return InfFormula::falsum();
}

namespace {

class Printer {
 public:
  explicit Printer(const InfFormula& root) { count_parents(root); }

  std::string run(const InfFormula& root) {
    std::string body;
    emit(root, 0, body, /*is_root=*/true);
    return defs_ + body + "\n";
  }

 private:
  void count_parents(const InfFormula& root) {
    std::vector<const InfFormula*> stack{&root};
    std::unordered_set<const InfNode*> expanded;
    while (!stack.empty()) {
      const InfFormula* f = stack.back();
      stack.pop_back();
      if (!expanded.insert(f->id()).second) continue;
      for (const InfFormula& c : f->children()) {
        ++parents_[c.id()];
        stack.push_back(&c);
      }
    }
  }

  bool shared(const InfFormula& f) const {
    if (f.kind() == InfKind::kAtom || f.kind() == InfKind::kFalsum ||
        f.kind() == InfKind::kVerum) {
      return false;
    }
    auto it = parents_.find(f.id());
    return it != parents_.end() && it->second > 1;
  }

  std::string reference(const InfFormula& f) {
    auto it = ids_.find(f.id());
    if (it != ids_.end()) return "@" + std::to_string(it->second);
    std::string text;
    emit(f, 1, text, /*is_root=*/true);
    std::size_t id = ids_.size();
    ids_.emplace(f.id(), id);
    defs_ += "@" + std::to_string(id) + " :=\n  " + text + "\n";
    return "@" + std::to_string(id);
  }

  void emit(const InfFormula& f, std::size_t indent, std::string& out,
            bool is_root) {
    if (!is_root && shared(f)) {
      out += reference(f);
      return;
    }
    switch (f.kind()) {
      case InfKind::kAtom: out += print_formula(f.atom_formula()); return;
      case InfKind::kFalsum: out += "falsum"; return;
      case InfKind::kVerum: out += "verum"; return;
      case InfKind::kNot: out += "(not"; break;
      case InfKind::kConj: out += "(conj"; break;
      case InfKind::kDisj: out += "(disj"; break;
      case InfKind::kExists: out += "(exists " + f.var(); break;
      case InfKind::kForall: out += "(forall " + f.var(); break;
    }
    for (const InfFormula& c : f.children()) {
      out += "\n" + std::string(2 * (indent + 1), ' ');
      emit(c, indent + 1, out, /*is_root=*/false);
    }
    out += ")";
  }

  std::unordered_map<const InfNode*, std::size_t> parents_;
  std::unordered_map<const InfNode*, std::size_t> ids_;
  std::string defs_;
};

}  // namespace

std::string print_inf(const InfFormula& psi) {
  Printer printer(psi);
  return printer.run(psi);
}

}  // namespace asrlogic
