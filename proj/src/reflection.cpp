#include "asrlogic/reflection.hpp"

#include "asrlogic/error.hpp"
#include "asrlogic/fo_eval.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

GoodnessResult is_good(const Formula& phi, std::span<const std::size_t> levels,
                       const Caps& caps) {
  if (!free_variables(phi).empty()) {
    throw ArityError("goodness is defined for sentences in ∈ and S");
  }
  if (contains_f(phi)) {
    throw WrongEvaluatorError("goodness sentences cannot use atom-f");
  }
  GoodnessResult result;
  result.good = true;
  for (std::size_t level : levels) {
    Structure v = v_level(level, caps);
    if (v.size() > 16) {
      throw SizeError("subset sweep over V_" + std::to_string(level) +
                      " is too large");
    }
    LevelGoodness lg;
    lg.level = level;
    const SubsetMask count = SubsetMask{1} << v.size();
    for (SubsetMask mask = 0; mask < count; ++mask) {
      std::vector<Tuple> members;
      for (Elem e = 0; e < v.size(); ++e) {
        if ((mask >> e) & 1U) members.push_back({e});
      }
      Structure expanded =
          v.with_relation(kPredicateS, Relation(1, v.size(), std::move(members)));
      CompiledFormula compiled(expanded, phi, {});
      if (compiled.eval({})) {
        ++lg.satisfying;
        lg.witness = mask;
      }
    }
    if (lg.satisfying != 1) {
      lg.witness.reset();
      result.good = false;
    }
    result.levels.push_back(lg);
  }
  return result;
}

GoodnessTable assemble_p(std::span<const GodelCode> codes,
                         std::span<const std::size_t> levels, const Caps& caps) {
  GoodnessTable table;
  table.levels.assign(levels.begin(), levels.end());
  for (const GodelCode& code : codes) {
    GoodnessResult g = is_good(godel_decode(code), levels, caps);
    GoodnessRow row;
    row.code = code;
    row.good = g.good;
    for (const LevelGoodness& lg : g.levels) {
      row.p.push_back(g.good ? *lg.witness : SubsetMask{0});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

GoodnessTable assemble_p(std::span<const GodelCode> codes, std::size_t top,
                         const Caps& caps) {
  std::vector<std::size_t> levels;
  for (std::size_t k = 1; k <= top; ++k) levels.push_back(k);
  return assemble_p(codes, levels, caps);
}

ReflectionReport find_reflecting_levels(const Formula& phi, std::size_t top,
                                        const Caps& caps) {
  std::set<std::string> free = free_variables(phi);
  if (free.size() != 1) {
    throw ArityError("reflection needs a one-parameter formula, got " +
                     std::to_string(free.size()) + " free variable(s)");
  }
  if (contains_f(phi)) {
    throw WrongEvaluatorError("reflection formulas cannot use atom-f");
  }
  ReflectionReport report;
  report.top = top;
  report.phi = phi;
  report.var = *free.begin();
  const Structure universe = v_level(top, caps);
  const CompiledFormula in_top(universe, phi, {report.var});
  for (std::size_t k = 0; k < top; ++k) {
    const Structure level = v_level(k, caps);
    const CompiledFormula in_level(level, phi, {report.var});
    bool reflects = true;
    // V_k is an initial segment of V_top in code order, so element indices
    // agree.
    for (Elem x = 0; x < level.size() && reflects; ++x) {
      const Elem value[1] = {x};
      reflects = in_top.eval(value) == in_level.eval(value);
    }
    if (reflects) report.reflecting.push_back(k);
  }
  return report;
}

}  // namespace asrlogic
