#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "asrlogic/caps.hpp"
#include "asrlogic/definability.hpp"
#include "asrlogic/hfset.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

/// Level `index` of the constructible hierarchy above a transitive base of
/// HF sets. L_0 is the base itself.
struct LLevel {
  std::vector<HFSet> base;    // sorted by code
  std::size_t index = 0;
  std::vector<HFSet> domain;  // sorted by code
};

struct DefResult {
  /// Definable subsets of the domain, each as the HF set it forms.
  std::vector<HFSet> subsets;
  bool certified = false;
  /// Non-empty when the census did not reach the invariance bound.
  std::string warning;
};

/// Subsets of a structure's domain definable with parameters from `pool`,
/// found by the formula census within caps.budget and certified against the
/// automorphism-invariance oracle.
DefinabilityReport def_op(const Structure& m, std::span<const Elem> pool,
                          const Caps& caps = {});

/// Def over (domain, ∈) with every domain element available as a parameter.
/// Raises SizeError past caps.automorphism.
DefResult def_op(const LLevel& level, const Caps& caps = {});

/// Builds and caches the levels above one base.
class ConstructibleHierarchy {
 public:
  /// Raises ValidationError unless `base` is transitive.
  explicit ConstructibleHierarchy(std::vector<HFSet> base, Caps caps = {});

  /// L_alpha; level i+1 is domain_i ∪ Def(domain_i). Raises SizeError when
  /// alpha exceeds caps.alpha or a Def step exceeds its domain cap.
  const LLevel& level(std::size_t alpha);

  /// S ∈ L_alpha, where S is given by its members. Levels are only
  /// materialized as far as the answer requires.
  bool contains(std::span<const HFSet> members, std::size_t alpha);

  /// Whether every Def step computed so far was certified.
  bool all_certified() const { return all_certified_; }

 private:
  std::vector<HFSet> base_;
  Caps caps_;
  std::vector<LLevel> levels_;
  bool all_certified_ = true;
};

LLevel l_level(std::vector<HFSet> base, std::size_t alpha, const Caps& caps = {});

bool in_l_level(std::span<const HFSet> members, std::vector<HFSet> base,
                std::size_t alpha, const Caps& caps = {});

/// The elements of V_n as HF sets, by increasing code.
std::vector<HFSet> v_elements(std::size_t n);

}  // namespace asrlogic
