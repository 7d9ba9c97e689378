#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asrlogic/caps.hpp"
#include "asrlogic/definability.hpp"
#include "asrlogic/formula.hpp"
#include "asrlogic/godel.hpp"

namespace asrlogic {

/// The distinguished unary predicate interpreted by candidate subsets.
inline constexpr const char* kPredicateS = "S";

struct LevelGoodness {
  std::size_t level = 0;
  /// Number of subsets S with (V_level, ∈, S) ⊨ φ.
  std::size_t satisfying = 0;
  /// The unique satisfying subset, when there is exactly one.
  std::optional<SubsetMask> witness;
};

struct GoodnessResult {
  bool good = false;
  std::vector<LevelGoodness> levels;
};

/// Exhaustive sweep over every S ⊆ V_κ for each listed κ. φ is a sentence in
/// ∈ and the unary relation S. Raises SizeError for κ above caps.vmax and
/// ArityError if φ has free variables.
GoodnessResult is_good(const Formula& phi, std::span<const std::size_t> levels,
                       const Caps& caps = {});

struct GoodnessRow {
  GodelCode code;
  bool good = false;
  /// P(n, ·) at each level: the unique witness when good, else empty.
  std::vector<SubsetMask> p;
};

struct GoodnessTable {
  std::vector<std::size_t> levels;
  std::vector<GoodnessRow> rows;  // in input order
};

/// Decodes each code and tabulates P. Raises NotACodeError for non-codes.
GoodnessTable assemble_p(std::span<const GodelCode> codes,
                         std::span<const std::size_t> levels,
                         const Caps& caps = {});

/// Levels 1..top.
GoodnessTable assemble_p(std::span<const GodelCode> codes, std::size_t top,
                         const Caps& caps = {});

struct ReflectionReport {
  std::size_t top = 0;
  Formula phi;
  std::string var;
  /// Every k < top such that for all x ∈ V_k, φ(x) holds in V_top iff it
  /// holds in V_k.
  std::vector<std::size_t> reflecting;
};

/// φ must have exactly one free variable (ArityError otherwise).
ReflectionReport find_reflecting_levels(const Formula& phi, std::size_t top,
                                        const Caps& caps = {});

}  // namespace asrlogic
