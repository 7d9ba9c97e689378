#include "asrlogic/structure.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "asrlogic/error.hpp"

namespace asrlogic {

namespace {

constexpr std::size_t kDenseLimit = std::size_t{1} << 24;

std::size_t dense_size(std::size_t n, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n != 0 && total > kDenseLimit / n) return 0;
    total *= n;
  }
  return total;
}

}  // namespace

Relation::Relation(std::size_t arity, std::size_t domain_size,
                   std::vector<Tuple> tuples)
    : arity_(arity), n_(domain_size), tuples_(std::move(tuples)) {
  for (const Tuple& t : tuples_) {
    if (t.size() != arity_) {
      throw VocabularyError("relation tuple of length " +
                            std::to_string(t.size()) + " in a relation of arity " +
                            std::to_string(arity_));
    }
    for (Elem e : t) {
      if (e >= n_) {
        throw VocabularyError("relation tuple element " + std::to_string(e) +
                              " outside domain of size " + std::to_string(n_));
      }
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  bits_.assign(dense_size(n_, arity_), false);
  if (!bits_.empty() || arity_ == 0) {
    if (arity_ == 0) bits_.assign(1, false);
    for (const Tuple& t : tuples_) {
      std::size_t index = 0;
      for (Elem e : t) index = index * n_ + e;
      bits_[index] = true;
    }
  }
}

bool Relation::holds(std::span<const Elem> args) const {
  if (!bits_.empty()) {
    std::size_t index = 0;
    for (Elem e : args) index = index * n_ + e;
    return bits_[index];
  }
  Tuple key(args.begin(), args.end());
  return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

Structure::Structure(std::size_t domain_size,
                     std::map<std::string, Relation> relations,
                     std::map<std::string, Elem> constants, StructureKind kind,
                     std::string name)
    : n_(domain_size),
      relations_(std::move(relations)),
      constants_(std::move(constants)),
      kind_(kind),
      name_(std::move(name)) {
  for (const auto& [cname, e] : constants_) {
    if (e >= n_) {
      throw VocabularyError("constant '" + cname + "' outside the domain");
    }
  }
}

const Relation* Structure::find_relation(std::string_view name) const {
  auto it = relations_.find(std::string(name));
  return it == relations_.end() ? nullptr : &it->second;
}

std::optional<Elem> Structure::find_constant(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

Structure Structure::with_relation(const std::string& name,
                                   Relation relation) const {
  Structure copy = *this;
  copy.relations_.insert_or_assign(name, std::move(relation));
  return copy;
}

std::string Structure::label(Elem e) const {
  if (is_hf_) return hf_[e].to_string();
  return std::to_string(e);
}

Structure Structure::membership(std::vector<HFSet> sets, StructureKind kind,
                                std::string name) {
  std::vector<Tuple> in;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[j].contains(sets[i])) in.push_back({i, j});
    }
  }
  std::map<std::string, Relation> relations;
  relations.emplace("in", Relation(2, sets.size(), std::move(in)));
  Structure s(sets.size(), std::move(relations), {}, kind, std::move(name));
  s.hf_ = std::move(sets);
  s.is_hf_ = true;
  return s;
}

Structure v_level(std::size_t n, const Caps& caps) {
  if (n > caps.vmax) {
    throw SizeError("V_" + std::to_string(n) + " exceeds the V-level cap " +
                    std::to_string(caps.vmax));
  }
  std::uint64_t size = v_size(n);
  std::vector<HFSet> sets;
  sets.reserve(size);
  for (std::uint64_t code = 0; code < size; ++code) sets.emplace_back(code);
  return Structure::membership(std::move(sets), StructureKind::kHfLevel,
                               "v" + std::to_string(n));
}

Structure nat_segment(std::size_t n) {
  if (n == 0) {
    throw ValidationError("nat segment needs N >= 1 to interpret 'one'");
  }
  std::size_t size = n + 1;
  std::vector<Tuple> lt, even, half;
  for (Elem a = 0; a < size; ++a) {
    if (a % 2 == 0) even.push_back({a});
    if (2 * a < size) half.push_back({2 * a, a});
    for (Elem b = a + 1; b < size; ++b) lt.push_back({a, b});
  }
  std::map<std::string, Relation> relations;
  relations.emplace("lt", Relation(2, size, std::move(lt)));
  relations.emplace("even", Relation(1, size, std::move(even)));
  relations.emplace("half", Relation(2, size, std::move(half)));
  std::map<std::string, Elem> constants{{"zero", 0}, {"one", 1}};
  return Structure(size, std::move(relations), std::move(constants),
                   StructureKind::kNatSegment, "nat:" + std::to_string(n));
}

Structure structure_from_json(std::string_view json_text,
                              const std::string& default_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("structure JSON: ") + e.what());
  }
  try {
    std::size_t n = doc.at("domain").get<std::size_t>();
    std::map<std::string, Relation> relations;
    if (doc.contains("relations")) {
      for (const auto& [name, tuples_json] : doc["relations"].items()) {
        std::vector<Tuple> tuples;
        for (const auto& t : tuples_json) tuples.push_back(t.get<Tuple>());
        std::size_t arity = 2;
        if (!tuples.empty()) {
          arity = tuples.front().size();
        } else if (doc.contains("arities") && doc["arities"].contains(name)) {
          arity = doc["arities"][name].get<std::size_t>();
        }
        relations.emplace(name, Relation(arity, n, std::move(tuples)));
      }
    }
    std::map<std::string, Elem> constants;
    if (doc.contains("constants")) {
      for (const auto& [name, e] : doc["constants"].items()) {
        constants.emplace(name, e.get<Elem>());
      }
    }
    return Structure(n, std::move(relations), std::move(constants),
                     StructureKind::kCustom, doc.value("name", default_name));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("structure JSON: ") + e.what());
  }
}

Structure load_structure(std::string_view spec, const Caps& caps) {
  if (spec.size() >= 2 && spec[0] == 'v' &&
      std::all_of(spec.begin() + 1, spec.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return v_level(std::stoul(std::string(spec.substr(1))), caps);
  }
  if (spec.starts_with("nat:")) {
    std::string digits(spec.substr(4));
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw ValidationError("bad nat segment '" + std::string(spec) + "'");
    }
    return nat_segment(std::stoul(digits));
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw IoError("cannot read structure file '" + std::string(spec) + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return structure_from_json(buffer.str(),
                             std::filesystem::path(spec).stem().string());
}

Structure directed_cycle(std::size_t n) {
  std::vector<Tuple> edges;
  for (Elem a = 0; a < n; ++a) edges.push_back({a, (a + 1) % n});
  std::map<std::string, Relation> relations;
  relations.emplace("edge", Relation(2, n, std::move(edges)));
  return Structure(n, std::move(relations), {}, StructureKind::kCustom,
                   "cycle" + std::to_string(n));
}

Structure empty_structure(std::size_t n) {
  return Structure(n, {}, {}, StructureKind::kCustom,
                   "empty" + std::to_string(n));
}

}  // namespace asrlogic
