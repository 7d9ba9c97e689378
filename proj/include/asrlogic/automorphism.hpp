#pragma once

#include <vector>

#include "asrlogic/caps.hpp"
#include "asrlogic/structure.hpp"

namespace asrlogic {

/// A permutation of the domain that preserves every relation and fixes every
/// constant. perm[e] is the image of e.
struct Automorphism {
  std::vector<Elem> perm;

  static Automorphism identity(std::size_t n);
  Automorphism compose(const Automorphism& inner) const;  // this ∘ inner
  Automorphism inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// Exhaustive tuple sweep: does `perm` map every relation onto itself and fix
/// every constant?
bool is_automorphism(const Structure& m, const std::vector<Elem>& perm);

/// Every automorphism of `m`, in lexicographic order of the permutation.
/// Backtracking assigns images element by element, pruning on degree
/// signatures and on relation tuples whose elements are all assigned.
/// Raises SizeError when the domain exceeds caps.automorphism.
std::vector<Automorphism> automorphisms(const Structure& m,
                                        const Caps& caps = {});

}  // namespace asrlogic
