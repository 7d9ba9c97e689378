#pragma once

#include <cstddef>
#include <string_view>

namespace asrlogic {

/// Desk-scale guardrails. All defaults can be overridden through the
/// ASRLOGIC_CAPS environment variable, e.g. "vmax=4,auto=8,budget=12".
struct Caps {
  std::size_t vmax = 4;         // highest V_n level that may be built
  std::size_t automorphism = 8; // largest domain for automorphism search/census
  std::size_t budget = 12;      // largest census formula size
  std::size_t alpha = 4;        // highest L-hierarchy index

  /// Parses "key=value,..." with keys vmax, auto, budget, alpha. Unknown keys
  /// or malformed values raise ValidationError.
  static Caps parse(std::string_view text);

  /// Defaults overridden by ASRLOGIC_CAPS when it is set.
  static Caps from_env();
};

}  // namespace asrlogic
