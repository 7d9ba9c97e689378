#include "asrlogic/formula.hpp"

#include <algorithm>

namespace asrlogic {

std::string Term::to_string() const {
  if (kind == Kind::kElem) return "#" + std::to_string(elem);
  return name;
}

Formula Formula::in(Term a, Term b) {
  Formula out;
  out.kind = FormulaKind::kIn;
  out.args = {std::move(a), std::move(b)};
  return out;
}

Formula Formula::eq(Term a, Term b) {
  Formula out;
  out.kind = FormulaKind::kEq;
  out.args = {std::move(a), std::move(b)};
  return out;
}

Formula Formula::relation(std::string name, std::vector<Term> args) {
  Formula out;
  out.kind = FormulaKind::kRel;
  out.rel = std::move(name);
  out.args = std::move(args);
  return out;
}

Formula Formula::f(std::vector<Term> args) {
  Formula out;
  out.kind = FormulaKind::kF;
  out.args = std::move(args);
  return out;
}

Formula Formula::negation(Formula a) {
  Formula out;
  out.kind = FormulaKind::kNot;
  out.children.push_back(std::move(a));
  return out;
}

Formula Formula::conj(std::vector<Formula> cs) {
  Formula out;
  out.kind = FormulaKind::kAnd;
  out.children = std::move(cs);
  return out;
}

Formula Formula::disj(std::vector<Formula> cs) {
  Formula out;
  out.kind = FormulaKind::kOr;
  out.children = std::move(cs);
  return out;
}

Formula Formula::implies(Formula a, Formula b) {
  Formula out;
  out.kind = FormulaKind::kImplies;
  out.children.push_back(std::move(a));
  out.children.push_back(std::move(b));
  return out;
}

Formula Formula::exists(std::string v, Formula body) {
  Formula out;
  out.kind = FormulaKind::kExists;
  out.var = std::move(v);
  out.children.push_back(std::move(body));
  return out;
}

Formula Formula::forall(std::string v, Formula body) {
  Formula out;
  out.kind = FormulaKind::kForall;
  out.var = std::move(v);
  out.children.push_back(std::move(body));
  return out;
}

bool Formula::is_atom() const {
  return kind == FormulaKind::kIn || kind == FormulaKind::kEq ||
         kind == FormulaKind::kRel || kind == FormulaKind::kF;
}

std::size_t ast_size(const Formula& phi) {
  std::size_t size = 1;
  for (const Formula& c : phi.children) size += ast_size(c);
  return size;
}

std::size_t formula_height(const Formula& phi) {
  std::size_t h = 0;
  for (const Formula& c : phi.children) h = std::max(h, formula_height(c) + 1);
  return h;
}

namespace {

void collect_free(const Formula& phi, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  if (phi.is_atom()) {
    for (const Term& t : phi.args) {
      if (t.kind == Term::Kind::kVar &&
          std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
        out.insert(t.name);
      }
    }
    return;
  }
  bool binds = phi.kind == FormulaKind::kExists ||
               phi.kind == FormulaKind::kForall;
  if (binds) bound.push_back(phi.var);
  for (const Formula& c : phi.children) collect_free(c, bound, out);
  if (binds) bound.pop_back();
}

void collect_consts(const Formula& phi, std::set<std::string>& out) {
  for (const Term& t : phi.args) {
    if (t.kind == Term::Kind::kConst) out.insert(t.name);
  }
  for (const Formula& c : phi.children) collect_consts(c, out);
}

void collect_f_arities(const Formula& phi, std::set<std::size_t>& out) {
  if (phi.kind == FormulaKind::kF) out.insert(phi.args.size());
  for (const Formula& c : phi.children) collect_f_arities(c, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& phi) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(phi, bound, out);
  return out;
}

bool contains_f(const Formula& phi) {
  if (phi.kind == FormulaKind::kF) return true;
  return std::any_of(phi.children.begin(), phi.children.end(), contains_f);
}

Formula substitute(const Formula& phi, const std::string& v, const Term& t) {
  if (phi.is_atom()) {
    Formula out = phi;
    for (Term& a : out.args) {
      if (a.kind == Term::Kind::kVar && a.name == v) a = t;
    }
    return out;
  }
  if ((phi.kind == FormulaKind::kExists || phi.kind == FormulaKind::kForall) &&
      phi.var == v) {
    return phi;
  }
  Formula out = phi;
  for (Formula& c : out.children) c = substitute(c, v, t);
  return out;
}

ValidationReport validate_asr(const AsrDocument& d) {
  ValidationReport report;
  auto fail = [&](std::string why) {
    report.accepted = false;
    report.violations.push_back(std::move(why));
  };

  const std::size_t k = d.k();
  if (k == 0) fail("document declares no parameters");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (d.params[i] == d.params[j]) {
        fail("parameter '" + d.params[i] + "' declared twice");
      }
    }
  }
  if (d.wf.size() != k) {
    fail("expected " + std::to_string(k) + " relation spec(s), found " +
         std::to_string(d.wf.size()));
  }

  auto check_consts = [&](const Formula& phi, const std::string& where) {
    std::set<std::string> used;
    collect_consts(phi, used);
    for (const std::string& c : used) {
      if (std::find(d.consts.begin(), d.consts.end(), c) == d.consts.end()) {
        fail(where + ": constant '" + c + "' is not declared");
      }
    }
  };
  auto check_f_arity = [&](const Formula& phi, const std::string& where) {
    std::set<std::size_t> arities;
    collect_f_arities(phi, arities);
    for (std::size_t a : arities) {
      if (a != k) {
        fail(where + ": f applied to " + std::to_string(a) +
             " argument(s), document has " + std::to_string(k) +
             " parameter(s)");
      }
    }
  };

  for (const std::string& v : free_variables(d.phi)) {
    if (std::find(d.params.begin(), d.params.end(), v) == d.params.end()) {
      fail("phi: unbound variable '" + v + "'");
    }
  }
  check_consts(d.phi, "phi");
  check_f_arity(d.phi, "phi");

  for (std::size_t i = 0; i < d.wf.size(); ++i) {
    const RelationSpec& spec = d.wf[i];
    const std::string where = "wf[" + std::to_string(i) + "]";
    if (spec.lower == spec.upper) {
      fail(where + ": argument variables must differ");
    }
    for (const std::string& v : free_variables(spec.body)) {
      bool ok = v == spec.lower || v == spec.upper;
      for (std::size_t j = i + 1; j < k && !ok; ++j) ok = v == d.params[j];
      if (!ok) fail(where + ": unbound variable '" + v + "'");
    }
    check_consts(spec.body, where);
    check_f_arity(spec.body, where);
    if (contains_f(spec.body)) {
      if (k == 1) {
        fail(where + ": self-reference is not allowed in the well-founded "
                     "relation of a single-relation document");
      } else {
        report.lex_guard_relations.push_back(i);
      }
    }
  }
  return report;
}

}  // namespace asrlogic
