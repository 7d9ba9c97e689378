#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "asrlogic/caps.hpp"
#include "asrlogic/formula.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

/// Subsets of a domain of size ≤ 64 as bitmasks: bit e set iff e ∈ S.
using SubsetMask = std::uint64_t;

struct DefinabilityReport {
  std::string structure;
  std::vector<Elem> params;  // the available parameter pool
  std::size_t budget = 0;
  /// Subset → smallest witness found (free variable x, parameters as #e).
  std::map<SubsetMask, Formula> definable;
  std::set<SubsetMask> invariant;
  bool certified = false;
  /// Largest formula size actually enumerated (smaller than budget when the
  /// census stopped early after certification).
  std::size_t size_reached = 0;
};

/// Subsets closed under every automorphism fixing each of `params`
/// pointwise. Raises SizeError past caps.automorphism.
std::set<SubsetMask> invariant_subsets(const Structure& m,
                                       std::span<const Elem> params,
                                       const Caps& caps = {});

/// Formula census. Enumerates formulas by increasing AST size up to `budget`
/// over atoms (=, every relation of m) on terms {x, y, z, constants,
/// parameters}, with not, binary and/or, and exists/forall over y and z.
/// Formulas are identified by their truth table over (x, y, z), so each
/// semantic class is expanded once. Parameters are available, not
/// mandatory: every choice of at most two pool elements is tried.
/// Enumeration stops early once every invariant subset has a witness.
DefinabilityReport enumerate_definable(const Structure& m,
                                       std::span<const Elem> params,
                                       std::size_t budget,
                                       const Caps& caps = {});

/// {a : m ⊨ phi[x ↦ a]} as a bitmask.
SubsetMask defined_subset(const Structure& m, const Formula& phi,
                          const std::string& var = "x");

std::string mask_to_hex(SubsetMask mask);

}  // namespace asrlogic
