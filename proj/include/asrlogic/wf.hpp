#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "asrlogic/structure.hpp"

namespace asrlogic {

using Pair = std::pair<Elem, Elem>;

/// The well-founded part of a binary relation R over {0..n-1}. A pair (a, b)
/// reads "a is R-below b".
struct WfAnalysis {
  std::size_t domain_size = 0;
  std::vector<Pair> relation;                   // sorted
  std::vector<Elem> wf_elements;                // sorted
  std::vector<Pair> wf_pairs;                   // sorted
  std::vector<std::optional<std::size_t>> elem_rank;  // set iff well-founded
  std::size_t height = 0;

  bool is_wf(Elem e) const { return elem_rank[e].has_value(); }
  /// R(a, b) with b in the well-founded part.
  bool wf_related(Elem a, Elem b) const;
  /// Elements a with wf_related(a, b), increasing.
  std::vector<Elem> wf_predecessors(Elem b) const;

 private:
  friend WfAnalysis well_founded_part(std::size_t, std::vector<Pair>);
  std::vector<std::vector<Elem>> preds_;
};

/// Least fixpoint of "every R-predecessor is already well-founded", with
/// elem_rank(u) = max over predecessors of rank + 1 and height = 1 + max
/// rank over the field of the well-founded pairs (0 if there are none).
WfAnalysis well_founded_part(std::size_t domain_size, std::vector<Pair> relation);

}  // namespace asrlogic
