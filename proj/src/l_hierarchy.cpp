#include "asrlogic/l_hierarchy.hpp"

#include <algorithm>
#include <set>

#include "asrlogic/error.hpp"

namespace asrlogic {

DefinabilityReport def_op(const Structure& m, std::span<const Elem> pool,
                          const Caps& caps) {
  return enumerate_definable(m, pool, caps.budget, caps);
}

DefResult def_op(const LLevel& level, const Caps& caps) {
  Structure m = Structure::membership(level.domain);
  std::vector<Elem> pool(m.size());
  for (Elem e = 0; e < m.size(); ++e) pool[e] = e;
  DefinabilityReport report = def_op(m, pool, caps);
  DefResult out;
  out.certified = report.certified;
  for (const auto& [mask, witness] : report.definable) {
    std::vector<HFSet> members;
    for (Elem e = 0; e < m.size(); ++e) {
      if ((mask >> e) & 1U) members.push_back(level.domain[e]);
    }
    out.subsets.push_back(HFSet::from_elements(members));
  }
  std::sort(out.subsets.begin(), out.subsets.end());
  if (!out.certified) {
    out.warning = "census budget " + std::to_string(caps.budget) + " reached " +
                  std::to_string(report.definable.size()) + " of " +
                  std::to_string(report.invariant.size()) +
                  " invariant subsets; Def may be incomplete";
  }
  return out;
}

ConstructibleHierarchy::ConstructibleHierarchy(std::vector<HFSet> base, Caps caps)
    : caps_(caps) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (!is_transitive_family(base)) {
    throw ValidationError("the base of the hierarchy must be transitive");
  }
  base_ = base;
  levels_.push_back(LLevel{base_, 0, std::move(base)});
}

const LLevel& ConstructibleHierarchy::level(std::size_t alpha) {
  if (alpha > caps_.alpha) {
    throw SizeError("L index " + std::to_string(alpha) + " exceeds the cap " +
                    std::to_string(caps_.alpha));
  }
  while (levels_.size() <= alpha) {
    const LLevel& prev = levels_.back();
    DefResult def = def_op(prev, caps_);
    all_certified_ = all_certified_ && def.certified;
    std::vector<HFSet> domain = prev.domain;
    domain.insert(domain.end(), def.subsets.begin(), def.subsets.end());
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    levels_.push_back(LLevel{base_, prev.index + 1, std::move(domain)});
  }
  return levels_[alpha];
}

bool ConstructibleHierarchy::contains(std::span<const HFSet> members,
                                      std::size_t alpha) {
  if (alpha > caps_.alpha) {
    throw SizeError("L index " + std::to_string(alpha) + " exceeds the cap " +
                    std::to_string(caps_.alpha));
  }
  const HFSet s = HFSet::from_elements(members);
  // L_i ⊆ L_{i+1}, so higher levels are only built when lower ones miss.
  for (std::size_t i = 0; i <= alpha; ++i) {
    const LLevel& l = level(i);
    if (std::binary_search(l.domain.begin(), l.domain.end(), s)) return true;
  }
  return false;
}

LLevel l_level(std::vector<HFSet> base, std::size_t alpha, const Caps& caps) {
  ConstructibleHierarchy h(std::move(base), caps);
  return h.level(alpha);
}

bool in_l_level(std::span<const HFSet> members, std::vector<HFSet> base,
                std::size_t alpha, const Caps& caps) {
  ConstructibleHierarchy h(std::move(base), caps);
  return h.contains(members, alpha);
}

std::vector<HFSet> v_elements(std::size_t n) {
  std::uint64_t size = v_size(n);
  std::vector<HFSet> out;
  for (std::uint64_t c = 0; c < size; ++c) out.emplace_back(c);
  return out;
}

}  // namespace asrlogic
