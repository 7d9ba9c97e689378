#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace asrlogic {

/// A hereditarily finite set identified by its Ackermann code: bit m of the
/// code is set iff the set coded by m is a member. Codes are 64-bit, so only
/// sets whose members all have code < 64 can be built (this covers V_5).
class HFSet {
 public:
  constexpr HFSet() = default;
  constexpr explicit HFSet(std::uint64_t code) : code_(code) {}

  /// The set whose members are exactly `elements`. Raises SizeError if a
  /// member's code does not fit in a 64-bit Ackermann code.
  static HFSet from_elements(std::span<const HFSet> elements);

  constexpr std::uint64_t code() const { return code_; }
  constexpr bool empty() const { return code_ == 0; }

  /// Members in increasing code order.
  std::vector<HFSet> elements() const;
  std::size_t size() const;
  bool contains(HFSet e) const;

  /// 0 for the empty set, else 1 + max member rank.
  std::size_t rank() const;

  bool is_transitive() const;

  /// Nested brace notation, e.g. "{{}, {{}}}".
  std::string to_string() const;

  friend constexpr auto operator<=>(HFSet, HFSet) = default;

 private:
  std::uint64_t code_ = 0;
};

/// Decodes an Ackermann code into its set; total on all codes.
inline HFSet ackermann_decode(std::uint64_t code) { return HFSet(code); }
inline std::uint64_t ackermann_encode(HFSet s) { return s.code(); }

std::size_t hf_rank(HFSet s);

/// Smallest transitive set containing every member of `s`, sorted by code.
std::vector<HFSet> transitive_closure(HFSet s);

/// Number of sets of rank < n: |V_0| = 0, |V_{n+1}| = 2^|V_n|. Raises
/// SizeError when the count does not fit in 64 bits (n ≥ 6).
std::uint64_t v_size(std::size_t n);

/// True iff every member of every element of `sets` is itself in `sets`.
bool is_transitive_family(std::span<const HFSet> sets);

}  // namespace asrlogic
