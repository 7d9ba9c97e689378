#include "asrlogic/automorphism.hpp"

#include <algorithm>

#include "asrlogic/error.hpp"

namespace asrlogic {

Automorphism Automorphism::identity(std::size_t n) {
  Automorphism a;
  a.perm.resize(n);
  for (Elem e = 0; e < n; ++e) a.perm[e] = e;
  return a;
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  Automorphism out;
  out.perm.resize(perm.size());
  for (Elem e = 0; e < perm.size(); ++e) out.perm[e] = perm[inner.perm[e]];
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out;
  out.perm.resize(perm.size());
  for (Elem e = 0; e < perm.size(); ++e) out.perm[perm[e]] = e;
  return out;
}

bool Automorphism::is_identity() const {
  for (Elem e = 0; e < perm.size(); ++e) {
    if (perm[e] != e) return false;
  }
  return true;
}

bool is_automorphism(const Structure& m, const std::vector<Elem>& perm) {
  if (perm.size() != m.size()) return false;
  std::vector<bool> hit(m.size(), false);
  for (Elem e : perm) {
    if (e >= m.size() || hit[e]) return false;
    hit[e] = true;
  }
  for (const auto& [name, c] : m.constants()) {
    if (perm[c] != c) return false;
  }
  for (const auto& [name, rel] : m.relations()) {
    Tuple image;
    for (const Tuple& t : rel.tuples()) {
      image.clear();
      for (Elem e : t) image.push_back(perm[e]);
      if (!rel.holds(image)) return false;
    }
  }
  return true;
}

namespace {

// Per-element isomorphism invariant: for each relation and argument
// position, how many tuples mention the element there.
std::vector<std::vector<std::size_t>> signatures(const Structure& m) {
  std::vector<std::vector<std::size_t>> sig(m.size());
  for (const auto& [name, rel] : m.relations()) {
    std::size_t base = sig.empty() ? 0 : sig[0].size();
    for (auto& s : sig) s.resize(base + rel.arity() + 1, 0);
    for (const Tuple& t : rel.tuples()) {
      bool diagonal = std::all_of(t.begin(), t.end(),
                                  [&](Elem e) { return e == t.front(); });
      for (std::size_t pos = 0; pos < t.size(); ++pos) ++sig[t[pos]][base + pos];
      if (diagonal && !t.empty()) ++sig[t.front()][base + rel.arity()];
    }
  }
  return sig;
}

class Search {
 public:
  explicit Search(const Structure& m)
      : m_(m),
        sig_(signatures(m)),
        image_(m.size(), kUnset),
        used_(m.size(), false) {
    for (const auto& [name, c] : m.constants()) fixed_.push_back(c);
    // Tuples are checked as soon as their largest element is assigned.
    by_max_.resize(m.size());
    for (const auto& [name, rel] : m.relations()) {
      for (const Tuple& t : rel.tuples()) {
        if (t.empty()) continue;
        Elem hi = *std::max_element(t.begin(), t.end());
        by_max_[hi].push_back({&rel, &t});
      }
    }
  }

  std::vector<Automorphism> run() {
    assign(0);
    return std::move(found_);
  }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);

  struct Check {
    const Relation* rel;
    const Tuple* tuple;
  };

  bool consistent(Elem e) const {
    Tuple image;
    for (const Check& c : by_max_[e]) {
      image.clear();
      for (Elem x : *c.tuple) image.push_back(image_[x]);
      if (!c.rel->holds(image)) return false;
    }
    return true;
  }

  void assign(Elem e) {
    if (e == m_.size()) {
      found_.push_back(Automorphism{image_});
      return;
    }
    bool is_fixed = std::find(fixed_.begin(), fixed_.end(), e) != fixed_.end();
    for (Elem target = 0; target < m_.size(); ++target) {
      if (used_[target] || sig_[target] != sig_[e]) continue;
      if (is_fixed && target != e) continue;
      image_[e] = target;
      used_[target] = true;
      // A bijection on a finite set preserving every tuple maps each
      // relation onto itself, so forward preservation suffices.
      if (consistent(e)) assign(e + 1);
      used_[target] = false;
      image_[e] = kUnset;
    }
  }

  const Structure& m_;
  std::vector<std::vector<std::size_t>> sig_;
  std::vector<Elem> image_;
  std::vector<bool> used_;
  std::vector<Elem> fixed_;
  std::vector<std::vector<Check>> by_max_;
  std::vector<Automorphism> found_;
};

}  // namespace

std::vector<Automorphism> automorphisms(const Structure& m, const Caps& caps) {
  if (m.size() > caps.automorphism) {
    throw SizeError("automorphism search over " + std::to_string(m.size()) +
                    " elements exceeds the cap " +
                    std::to_string(caps.automorphism));
  }
  return Search(m).run();
}

}  // namespace asrlogic
