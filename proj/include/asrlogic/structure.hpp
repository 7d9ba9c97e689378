#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asrlogic/caps.hpp"
#include "asrlogic/hfset.hpp"

namespace asrlogic {

/// Domain elements are positions 0..n-1 of the structure's domain.
using Elem = std::size_t;
using Tuple = std::vector<Elem>;

/// A relation of fixed arity over a domain of size n, stored both as a
/// sorted tuple list and as a dense bit table indexed in mixed radix n.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t arity, std::size_t domain_size,
           std::vector<Tuple> tuples);

  std::size_t arity() const { return arity_; }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  bool holds(std::span<const Elem> args) const;
  bool holds2(Elem a, Elem b) const {
    if (bits_.empty()) {
      const Elem pair[2] = {a, b};
      return holds(pair);
    }
    return bits_[a * n_ + b];
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t arity_ = 0;
  std::size_t n_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<bool> bits_;
};

enum class StructureKind { kHfLevel, kNatSegment, kCustom };

/// A finite first-order structure. Immutable after construction.
class Structure {
 public:
  Structure(std::size_t domain_size, std::map<std::string, Relation> relations,
            std::map<std::string, Elem> constants,
            StructureKind kind = StructureKind::kCustom,
            std::string name = "custom");

  std::size_t size() const { return n_; }
  StructureKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  const std::map<std::string, Relation>& relations() const {
    return relations_;
  }
  const std::map<std::string, Elem>& constants() const { return constants_; }

  /// Null if absent.
  const Relation* find_relation(std::string_view name) const;
  std::optional<Elem> find_constant(std::string_view name) const;

  /// Hereditarily finite interpretation of each element, when the structure
  /// is a membership structure over HF sets (hf-level or built from sets).
  const std::vector<HFSet>& hf_labels() const { return hf_; }
  bool has_hf_labels() const { return is_hf_; }

  /// Copy with `name` (re)bound to `relation`.
  Structure with_relation(const std::string& name, Relation relation) const;

  /// Display label of an element: HF brace notation, or its index.
  std::string label(Elem e) const;

  /// (domain, ∈) over an arbitrary list of distinct HF sets; the domain
  /// order is the given order. Used for hf-levels and L-hierarchy levels.
  static Structure membership(std::vector<HFSet> sets,
                              StructureKind kind = StructureKind::kCustom,
                              std::string name = "membership");

 private:
  std::size_t n_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, Elem> constants_;
  StructureKind kind_;
  std::string name_;
  std::vector<HFSet> hf_;
  bool is_hf_ = false;
};

/// V_n as (all HF sets of rank < n, ∈). Domain index equals Ackermann code.
Structure v_level(std::size_t n, const Caps& caps = {});

/// {0..n} with lt, even, half(x, y) ⇔ x = 2y and constants zero, one.
Structure nat_segment(std::size_t n);

/// Structure from {"domain": N, "relations": {...}, "constants": {...}}.
/// Relation arity is taken from the tuples, or from an optional "arities"
/// object for empty relations (default 2). An optional "name" overrides
/// `default_name`.
Structure structure_from_json(std::string_view json_text,
                              const std::string& default_name = "custom");

/// "v0".."vN", "nat:N", or a path to a JSON structure document.
Structure load_structure(std::string_view spec, const Caps& caps = {});

/// Directed cycle on n nodes with relation "edge".
Structure directed_cycle(std::size_t n);

/// n elements and no relations.
Structure empty_structure(std::size_t n);

}  // namespace asrlogic
