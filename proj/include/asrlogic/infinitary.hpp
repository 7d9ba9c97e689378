#pragma once

#include <cstddef>

#include "asrlogic/fo_eval.hpp"
#include "asrlogic/formula.hpp"
#include "asrlogic/inf_formula.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

/// Tarski satisfaction for set-indexed joins over a finite structure. Closed
/// shared subformulas are evaluated once per call.
bool eval_inf(const Structure& m, const InfFormula& psi, const Assignment& a);

/// Unfolds a single-relation document at parameter value x into an f-free
/// infinitary formula whose only free variable is the parameter. Each
/// atom-f(t) becomes disj over {a : R_w(a, x)} of conj{t = #a, U(a)}, where
/// U(a) is the unfolding at a with the parameter replaced by #a; if x is
/// outside the well-founded part, atom-f becomes falsum. U(a) is built once
/// per element and shared.
InfFormula unfold_asr(const Structure& m, const AsrDocument& d, Elem x);

/// Multiplier c with rank(unfold_asr(m, d, x)) ≤ c · (elem_rank(x) + 1) for
/// well-founded x: the height of the translated formula proper plus two
/// (each unfolding step adds a disj and a conj above the shared subtree).
std::size_t unfold_rank_constant(const AsrDocument& d);

}  // namespace asrlogic
