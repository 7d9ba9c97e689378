#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "asrlogic/fo_eval.hpp"
#include "asrlogic/formula.hpp"
#include "asrlogic/structure.hpp"
#include "asrlogic/wf.hpp"

namespace asrlogic {

struct AsrOptions {
  bool memoize = true;
};

/// Materializes the pair set of an f-free relation spec over the domain.
std::vector<Pair> materialize_relation(const Structure& m,
                                       const RelationSpec& spec);

/// Single-relation evaluation: atom-f(a) is false unless a is R_w-below the
/// current parameter, in which case it is the formula proper at a. Raises
/// ValidationError if the document is rejected or has k ≠ 1.
bool eval_asr(const Structure& m, const AsrDocument& d, Elem x,
              const AsrOptions& options = {});

/// One evaluation session for a document with k ≥ 1 relations. Holds the
/// memo of formula-proper values per parameter tuple and of well-founded
/// analyses per (relation index, fixed higher coordinates).
///
/// A call f(a) placed in context (x_1..x_k) from relation index j (j = -1
/// inside the formula proper, j = i inside relation spec i) is false unless
/// the tuples differ, the highest differing coordinate i exceeds j, and a_i
/// is R_w-below x_i in relation i relativized to the shared higher
/// coordinates. Otherwise it is the formula proper at a.
class AsrSession {
 public:
  AsrSession(const Structure& m, const AsrDocument& d,
             const AsrOptions& options = {});
  ~AsrSession();
  AsrSession(const AsrSession&) = delete;
  AsrSession& operator=(const AsrSession&) = delete;

  bool eval(std::span<const Elem> xs);

  /// Well-founded analysis of relation `index` with coordinates above it
  /// fixed to `key` (size k - 1 - index).
  const WfAnalysis& relation(std::size_t index, std::span<const Elem> key);

  std::size_t memo_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool eval_asr_multi(const Structure& m, const AsrDocument& d,
                    std::span<const Elem> xs, const AsrOptions& options = {});

struct RelationHeightEntry {
  Tuple key;  // fixed higher coordinates
  std::size_t height = 0;
};

struct RelationHeight {
  std::size_t index = 0;
  std::vector<RelationHeightEntry> entries;
  std::size_t max_height = 0;
};

/// Heights of every relation spec, per assignment of higher coordinates.
std::vector<RelationHeight> relation_height(const AsrDocument& d,
                                            const Structure& m);

}  // namespace asrlogic
