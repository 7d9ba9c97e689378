#include "asrlogic/hfset.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "asrlogic/error.hpp"

namespace asrlogic {

HFSet HFSet::from_elements(std::span<const HFSet> elements) {
  std::uint64_t code = 0;
  for (HFSet e : elements) {
    if (e.code() >= 64) {
      throw SizeError("HF set member with code " + std::to_string(e.code()) +
                      " does not fit a 64-bit Ackermann code");
    }
    code |= std::uint64_t{1} << e.code();
  }
  return HFSet(code);
}

std::vector<HFSet> HFSet::elements() const {
  std::vector<HFSet> out;
  for (std::uint64_t rest = code_; rest != 0; rest &= rest - 1) {
    out.emplace_back(static_cast<std::uint64_t>(std::countr_zero(rest)));
  }
  return out;
}

std::size_t HFSet::size() const {
  return static_cast<std::size_t>(std::popcount(code_));
}

bool HFSet::contains(HFSet e) const {
  return e.code() < 64 && ((code_ >> e.code()) & 1U) != 0;
}

std::size_t HFSet::rank() const {
  // Member codes are strictly smaller than the code, so the recursion is
  // shallow: depth ≤ log* of the code.
  std::size_t best = 0;
  for (HFSet e : elements()) best = std::max(best, e.rank() + 1);
  return best;
}

bool HFSet::is_transitive() const {
  for (HFSet e : elements()) {
    for (HFSet g : e.elements()) {
      if (!contains(g)) return false;
    }
  }
  return true;
}

std::string HFSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (HFSet e : elements()) {
    if (!first) out += ", ";
    first = false;
    out += e.to_string();
  }
  out += "}";
  return out;
}

std::size_t hf_rank(HFSet s) { return s.rank(); }

std::vector<HFSet> transitive_closure(HFSet s) {
  std::set<HFSet> seen;
  std::vector<HFSet> stack = s.elements();
  while (!stack.empty()) {
    HFSet e = stack.back();
    stack.pop_back();
    if (!seen.insert(e).second) continue;
    for (HFSet g : e.elements()) stack.push_back(g);
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t v_size(std::size_t n) {
  std::uint64_t size = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (size >= 64) {
      throw SizeError("|V_" + std::to_string(n) + "| exceeds 64 bits");
    }
    size = std::uint64_t{1} << size;
  }
  return size;
}

bool is_transitive_family(std::span<const HFSet> sets) {
  std::set<HFSet> members(sets.begin(), sets.end());
  for (HFSet s : sets) {
    for (HFSet e : s.elements()) {
      if (!members.contains(e)) return false;
    }
  }
  return true;
}

}  // namespace asrlogic
