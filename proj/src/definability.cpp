#include "asrlogic/definability.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <unordered_map>

#include "asrlogic/automorphism.hpp"
#include "asrlogic/error.hpp"
#include "asrlogic/fo_eval.hpp"

namespace asrlogic {

std::set<SubsetMask> invariant_subsets(const Structure& m,
                                       std::span<const Elem> params,
                                       const Caps& caps) {
  const std::size_t n = m.size();
  std::vector<Automorphism> fixing;
  for (Automorphism& a : automorphisms(m, caps)) {
    bool fixes = std::all_of(params.begin(), params.end(),
                             [&](Elem p) { return a.perm[p] == p; });
    if (fixes) fixing.push_back(std::move(a));
  }
  std::set<SubsetMask> out;
  const SubsetMask count = SubsetMask{1} << n;
  for (SubsetMask mask = 0; mask < count; ++mask) {
    bool closed = true;
    for (const Automorphism& a : fixing) {
      SubsetMask image = 0;
      for (Elem e = 0; e < n; ++e) {
        if ((mask >> e) & 1U) image |= SubsetMask{1} << a.perm[e];
      }
      if (image != mask) {
        closed = false;
        break;
      }
    }
    if (closed) out.insert(mask);
  }
  return out;
}

SubsetMask defined_subset(const Structure& m, const Formula& phi,
                          const std::string& var) {
  if (m.size() > 64) throw SizeError("subset masks need a domain of at most 64");
  CompiledFormula compiled(m, phi, {var});
  SubsetMask mask = 0;
  for (Elem e = 0; e < m.size(); ++e) {
    const Elem value[1] = {e};
    if (compiled.eval(value)) mask |= SubsetMask{1} << e;
  }
  return mask;
}

std::string mask_to_hex(SubsetMask mask) {
  char buffer[24];
  std::snprintf(buffer, sizeof buffer, "0x%llx",
                static_cast<unsigned long long>(mask));
  return buffer;
}

namespace {

// Truth table over assignments (x, y, z) ∈ D³, index x + n·y + n²·z.
// Domains of at most 8 elements need at most 512 bits.
struct Table {
  std::array<std::uint64_t, 8> w{};
  friend bool operator==(const Table&, const Table&) = default;
};

struct TableHash {
  std::size_t operator()(const Table& t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t v : t.w) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

enum class Op : std::uint8_t { kAtom, kNot, kAnd, kOr, kExistsY, kForallY, kExistsZ, kForallZ };

struct Entry {
  Table table;
  Op op;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
};

class Census {
 public:
  Census(const Structure& m, std::vector<Elem> params,
         const std::set<SubsetMask>& target, DefinabilityReport& report)
      : m_(m),
        n_(m.size()),
        cells_(n_ * n_ * n_),
        words_((cells_ + 63) / 64),
        params_(std::move(params)),
        target_(target),
        report_(report) {
    for (std::size_t i = 0; i < words_; ++i) {
      std::size_t bits = std::min<std::size_t>(64, cells_ - 64 * i);
      full_.w[i] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    }
  }

  // Returns true if the census reached every target subset.
  bool run(std::size_t budget) {
    build_terms();
    by_size_.assign(budget + 1, {});
    if (budget >= 1) add_atoms();
    if (done()) return true;
    for (std::size_t size = 2; size <= budget; ++size) {
      report_.size_reached = std::max(report_.size_reached, size);
      for (std::uint32_t id : by_size_[size - 1]) {
        const Table t = entries_[id].table;
        if (add(negate(t), size, Op::kNot, id)) return true;
        if (add(quantify(t, 1, true), size, Op::kExistsY, id)) return true;
        if (add(quantify(t, 1, false), size, Op::kForallY, id)) return true;
        if (add(quantify(t, 2, true), size, Op::kExistsZ, id)) return true;
        if (add(quantify(t, 2, false), size, Op::kForallZ, id)) return true;
      }
      for (std::size_t left = 1; 2 * left <= size - 1; ++left) {
        const std::size_t right = size - 1 - left;
        const auto& ls = by_size_[left];
        const auto& rs = by_size_[right];
        for (std::size_t i = 0; i < ls.size(); ++i) {
          for (std::size_t j = left == right ? i + 1 : 0; j < rs.size(); ++j) {
            const Table& ta = entries_[ls[i]].table;
            const Table& tb = entries_[rs[j]].table;
            Table conj, disj;
            for (std::size_t w = 0; w < words_; ++w) {
              conj.w[w] = ta.w[w] & tb.w[w];
              disj.w[w] = ta.w[w] | tb.w[w];
            }
            if (add(conj, size, Op::kAnd, ls[i], rs[j])) return true;
            if (add(disj, size, Op::kOr, ls[i], rs[j])) return true;
          }
        }
      }
    }
    return done();
  }

 private:
  struct CTerm {
    Term term;
    int slot;  // 0,1,2 for x,y,z; -1 for a fixed element
    Elem value;
  };

  void build_terms() {
    terms_.push_back({Term::var("x"), 0, 0});
    terms_.push_back({Term::var("y"), 1, 0});
    terms_.push_back({Term::var("z"), 2, 0});
    for (const auto& [name, e] : m_.constants()) {
      terms_.push_back({Term::constant(name), -1, e});
    }
    for (Elem p : params_) terms_.push_back({Term::element(p), -1, p});
  }

  Elem term_value(const CTerm& t, Elem x, Elem y, Elem z) const {
    switch (t.slot) {
      case 0: return x;
      case 1: return y;
      case 2: return z;
      default: return t.value;
    }
  }

  template <class Pred>
  Table tabulate(Pred&& pred) const {
    Table t;
    for (Elem z = 0; z < n_; ++z) {
      for (Elem y = 0; y < n_; ++y) {
        for (Elem x = 0; x < n_; ++x) {
          if (pred(x, y, z)) {
            std::size_t cell = x + n_ * y + n_ * n_ * z;
            t.w[cell / 64] |= std::uint64_t{1} << (cell % 64);
          }
        }
      }
    }
    return t;
  }

  void add_atoms() {
    report_.size_reached = std::max<std::size_t>(report_.size_reached, 1);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      for (std::size_t j = i; j < terms_.size(); ++j) {
        Formula atom = Formula::eq(terms_[i].term, terms_[j].term);
        Table t = tabulate([&](Elem x, Elem y, Elem z) {
          return term_value(terms_[i], x, y, z) == term_value(terms_[j], x, y, z);
        });
        if (add_atom(t, std::move(atom))) return;
      }
    }
    for (const auto& [name, rel] : m_.relations()) {
      const std::size_t arity = rel.arity();
      std::vector<std::size_t> pick(arity, 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t p : pick) args.push_back(terms_[p].term);
        Formula atom = name == "in" && arity == 2
                           ? Formula::in(args[0], args[1])
                           : Formula::relation(name, args);
        Table t = tabulate([&](Elem x, Elem y, Elem z) {
          Tuple values;
          for (std::size_t p : pick) values.push_back(term_value(terms_[p], x, y, z));
          return rel.holds(values);
        });
        if (add_atom(t, std::move(atom))) return;
        std::size_t pos = 0;
        while (pos < arity && ++pick[pos] == terms_.size()) pick[pos++] = 0;
        if (pos == arity) break;
      }
    }
  }

  bool add_atom(const Table& t, Formula atom) {
    atoms_.push_back(std::move(atom));
    return add(t, 1, Op::kAtom, static_cast<std::uint32_t>(atoms_.size() - 1));
  }

  Table negate(const Table& t) const {
    Table out;
    for (std::size_t w = 0; w < words_; ++w) out.w[w] = ~t.w[w] & full_.w[w];
    return out;
  }

  bool bit(const Table& t, std::size_t cell) const {
    return ((t.w[cell / 64] >> (cell % 64)) & 1U) != 0;
  }

  Table quantify(const Table& t, int slot, bool existential) const {
    return tabulate([&](Elem x, Elem y, Elem z) {
      for (Elem v = 0; v < n_; ++v) {
        Elem yy = slot == 1 ? v : y;
        Elem zz = slot == 2 ? v : z;
        bool b = bit(t, x + n_ * yy + n_ * n_ * zz);
        if (existential && b) return true;
        if (!existential && !b) return false;
      }
      return !existential;
    });
  }

  // Mask of x-values if the table does not depend on y and z.
  std::optional<SubsetMask> as_subset(const Table& t) const {
    SubsetMask mask = 0;
    for (Elem x = 0; x < n_; ++x) {
      if (bit(t, x)) mask |= SubsetMask{1} << x;
    }
    for (std::size_t cell = 0; cell < cells_; ++cell) {
      if (bit(t, cell) != (((mask >> (cell % n_)) & 1U) != 0)) return std::nullopt;
    }
    return mask;
  }

  // Records a new semantic class; returns true once the target is reached.
  bool add(const Table& t, std::size_t size, Op op, std::uint32_t a,
           std::uint32_t b = 0) {
    auto [it, inserted] =
        seen_.try_emplace(t, static_cast<std::uint32_t>(entries_.size()));
    if (!inserted) return false;
    entries_.push_back({t, op, a, b});
    by_size_[size].push_back(it->second);
    if (auto mask = as_subset(t)) {
      auto existing = report_.definable.find(*mask);
      if (existing == report_.definable.end()) {
        report_.definable.emplace(*mask, witness(it->second));
      } else if (ast_size(existing->second) > size) {
        existing->second = witness(it->second);
      }
      return done();
    }
    return false;
  }

  bool done() const { return report_.definable.size() == target_.size(); }

  Formula witness(std::uint32_t id) const {
    const Entry& e = entries_[id];
    switch (e.op) {
      case Op::kAtom: return atoms_[e.a];
      case Op::kNot: return Formula::negation(witness(e.a));
      case Op::kAnd: return Formula::conj({witness(e.a), witness(e.b)});
      case Op::kOr: return Formula::disj({witness(e.a), witness(e.b)});
      case Op::kExistsY: return Formula::exists("y", witness(e.a));
      case Op::kForallY: return Formula::forall("y", witness(e.a));
      case Op::kExistsZ: return Formula::exists("z", witness(e.a));
      case Op::kForallZ: return Formula::forall("z", witness(e.a));
    }
    return atoms_.front();
  }

  const Structure& m_;
  std::size_t n_;
  std::size_t cells_;
  std::size_t words_;
  Table full_;
  std::vector<Elem> params_;
  const std::set<SubsetMask>& target_;
  DefinabilityReport& report_;
  std::vector<CTerm> terms_;
  std::vector<Formula> atoms_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::unordered_map<Table, std::uint32_t, TableHash> seen_;
};

}  // namespace

DefinabilityReport enumerate_definable(const Structure& m,
                                       std::span<const Elem> params,
                                       std::size_t budget, const Caps& caps) {
  if (m.size() > caps.automorphism) {
    throw SizeError("census over " + std::to_string(m.size()) +
                    " elements exceeds the cap " +
                    std::to_string(caps.automorphism));
  }
  if (m.size() > 8) {
    throw SizeError("census truth tables support at most 8 elements");
  }
  if (budget > caps.budget) {
    throw SizeError("census budget " + std::to_string(budget) +
                    " exceeds the cap " + std::to_string(caps.budget));
  }
  for (Elem p : params) {
    if (p >= m.size()) {
      throw ValidationError("parameter " + std::to_string(p) +
                            " outside the domain of " + m.name());
    }
  }
  std::vector<Elem> pool(params.begin(), params.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  DefinabilityReport report;
  report.structure = m.name();
  report.params = pool;
  report.budget = budget;
  report.invariant = invariant_subsets(m, pool, caps);

  // Every formula with at most two parameters from the pool is enumerated
  // by some run over a maximal choice, since smaller choices are subsumed.
  std::vector<std::vector<Elem>> choices;
  if (pool.size() <= 2) {
    choices.push_back(pool);
  } else {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        choices.push_back({pool[i], pool[j]});
      }
    }
  }
  for (const std::vector<Elem>& choice : choices) {
    Census census(m, choice, report.invariant, report);
    if (census.run(budget)) break;
  }
  report.certified =
      std::equal(report.definable.begin(), report.definable.end(),
                 report.invariant.begin(), report.invariant.end(),
                 [](const auto& entry, SubsetMask mask) {
                   return entry.first == mask;
                 });
  return report;
}

}  // namespace asrlogic
