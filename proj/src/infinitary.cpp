#include "asrlogic/infinitary.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "asrlogic/asr_eval.hpp"
#include "asrlogic/error.hpp"

namespace asrlogic {

namespace {

class InfEvaluator {
 public:
  explicit InfEvaluator(const Structure& m) : m_(m) {}

  bool eval(const InfFormula& psi, std::vector<std::pair<std::string, Elem>>& env) {
    if (psi.closed()) {
      auto it = closed_memo_.find(psi.id());
      if (it != closed_memo_.end()) return it->second;
      bool value = eval_node(psi, env);
      closed_memo_.emplace(psi.id(), value);
      return value;
    }
    return eval_node(psi, env);
  }

 private:
  Elem term_value(const Term& t,
                  const std::vector<std::pair<std::string, Elem>>& env) const {
    switch (t.kind) {
      case Term::Kind::kVar: {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        throw ValidationError("unassigned free variable '" + t.name + "'");
      }
      case Term::Kind::kConst: {
        auto c = m_.find_constant(t.name);
        if (!c) throw VocabularyError("unknown constant '" + t.name + "'");
        return *c;
      }
      case Term::Kind::kElem:
        if (t.elem >= m_.size()) {
          throw VocabularyError("element #" + std::to_string(t.elem) +
                                " outside the domain");
        }
        return t.elem;
    }
    return 0;
  }

  bool eval_atom(const Formula& atom,
                 const std::vector<std::pair<std::string, Elem>>& env) const {
    std::vector<Elem> args;
    for (const Term& t : atom.args) args.push_back(term_value(t, env));
    if (atom.kind == FormulaKind::kEq) return args[0] == args[1];
    const std::string& name = atom.kind == FormulaKind::kIn ? "in" : atom.rel;
    const Relation* rel = m_.find_relation(name);
    if (rel == nullptr) throw VocabularyError("unknown relation '" + name + "'");
    if (rel->arity() != args.size()) {
      throw VocabularyError("relation '" + name + "' used at the wrong arity");
    }
    return rel->holds(args);
  }

  bool eval_node(const InfFormula& psi,
                 std::vector<std::pair<std::string, Elem>>& env) {
    switch (psi.kind()) {
      case InfKind::kAtom: return eval_atom(psi.atom_formula(), env);
      case InfKind::kFalsum: return false;
      case InfKind::kVerum: return true;
      case InfKind::kNot: return !eval(psi.children()[0], env);
      case InfKind::kConj:
        for (const InfFormula& c : psi.children()) {
          if (!eval(c, env)) return false;
        }
        return true;
      case InfKind::kDisj:
        for (const InfFormula& c : psi.children()) {
          if (eval(c, env)) return true;
        }
        return false;
      case InfKind::kExists:
      case InfKind::kForall: {
        const bool existential = psi.kind() == InfKind::kExists;
        env.emplace_back(psi.var(), 0);
        bool result = !existential;
        for (Elem e = 0; e < m_.size(); ++e) {
          env.back().second = e;
          if (eval(psi.children()[0], env) == existential) {
            result = existential;
            break;
          }
        }
        env.pop_back();
        return result;
      }
    }
    return false;
  }

  const Structure& m_;
  std::unordered_map<const InfNode*, bool> closed_memo_;
};

class Unfolder {
 public:
  Unfolder(const Structure& m, const AsrDocument& d)
      : m_(m),
        d_(d),
        wf_(well_founded_part(m.size(), materialize_relation(m, d.wf[0]))),
        cache_(m.size()) {}

  // The formula proper at `x`; with `closed` the parameter is replaced by #x.
  InfFormula at(Elem x, bool closed) {
    if (closed && cache_[x]) return *cache_[x];
    InfFormula out = build(d_.phi, x, closed);
    if (closed) cache_[x] = out;
    return out;
  }

 private:
  InfFormula build(const Formula& phi, Elem x, bool substitute) {
    const std::string& param = d_.params[0];
    switch (phi.kind) {
      case FormulaKind::kIn:
      case FormulaKind::kEq:
      case FormulaKind::kRel: {
        Formula atom = substitute ? asrlogic::substitute(phi, param, Term::element(x)) : phi;
        return InfFormula::atom(std::move(atom));
      }
      case FormulaKind::kF: {
        if (!wf_.is_wf(x)) return InfFormula::falsum();
        Term t = phi.args[0];
        if (substitute && t.kind == Term::Kind::kVar && t.name == param) {
          t = Term::element(x);
        }
        std::vector<InfFormula> options;
        for (Elem a : wf_.wf_predecessors(x)) {
          options.push_back(InfFormula::conj(
              {InfFormula::atom(Formula::eq(t, Term::element(a))), at(a, true)}));
        }
        return InfFormula::disj(std::move(options));
      }
      case FormulaKind::kNot:
        return InfFormula::negation(build(phi.children[0], x, substitute));
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        std::vector<InfFormula> cs;
        for (const Formula& c : phi.children) cs.push_back(build(c, x, substitute));
        return phi.kind == FormulaKind::kAnd ? InfFormula::conj(std::move(cs))
                                             : InfFormula::disj(std::move(cs));
      }
      case FormulaKind::kImplies:
        return InfFormula::disj(
            {InfFormula::negation(build(phi.children[0], x, substitute)),
             build(phi.children[1], x, substitute)});
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        // A binder of the parameter name shadows it below.
        bool inner = substitute && phi.var != param;
        InfFormula body = build(phi.children[0], x, inner);
        return phi.kind == FormulaKind::kExists
                   ? InfFormula::exists(phi.var, std::move(body))
                   : InfFormula::forall(phi.var, std::move(body));
      }
    }
    return InfFormula::falsum();
  }

  const Structure& m_;
  const AsrDocument& d_;
  WfAnalysis wf_;
  std::vector<std::optional<InfFormula>> cache_;
};

}  // namespace

bool eval_inf(const Structure& m, const InfFormula& psi, const Assignment& a) {
  std::vector<std::pair<std::string, Elem>> env;
  for (const auto& [name, e] : a) {
    if (e >= m.size()) throw ValidationError("assignment outside the domain");
    env.emplace_back(name, e);
  }
  for (const std::string& v : psi.free_vars()) {
    if (!a.contains(v)) {
      throw ValidationError("unassigned free variable '" + v + "'");
    }
  }
  InfEvaluator evaluator(m);
  return evaluator.eval(psi, env);
}

InfFormula unfold_asr(const Structure& m, const AsrDocument& d, Elem x) {
  ValidationReport report = validate_asr(d);
  if (!report.accepted || d.k() != 1) {
    throw ValidationError("unfolding needs an accepted single-relation document");
  }
  if (x >= m.size()) throw ValidationError("parameter outside the domain");
  Unfolder unfolder(m, d);
  return unfolder.at(x, false);
}

namespace {

// Height of the formula proper after translation, where implies a b becomes
// disj{not a, b}.
std::size_t translated_height(const Formula& phi) {
  if (phi.is_atom()) return 0;
  if (phi.kind == FormulaKind::kImplies) {
    return std::max(translated_height(phi.children[0]) + 2,
                    translated_height(phi.children[1]) + 1);
  }
  std::size_t h = 0;
  for (const Formula& c : phi.children) h = std::max(h, translated_height(c) + 1);
  return h;
}

}  // namespace

std::size_t unfold_rank_constant(const AsrDocument& d) {
  return translated_height(d.phi) + 2;
}

}  // namespace asrlogic
