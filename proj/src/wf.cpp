#include "asrlogic/wf.hpp"

#include <algorithm>

#include "asrlogic/error.hpp"

namespace asrlogic {

bool WfAnalysis::wf_related(Elem a, Elem b) const {
  if (!is_wf(b)) return false;
  const auto& p = preds_[b];
  return std::binary_search(p.begin(), p.end(), a);
}

std::vector<Elem> WfAnalysis::wf_predecessors(Elem b) const {
  if (!is_wf(b)) return {};
  return preds_[b];
}

WfAnalysis well_founded_part(std::size_t domain_size, std::vector<Pair> relation) {
  WfAnalysis out;
  out.domain_size = domain_size;
  std::sort(relation.begin(), relation.end());
  relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
  out.preds_.assign(domain_size, {});
  for (const auto& [a, b] : relation) {
    if (a >= domain_size || b >= domain_size) {
      throw ValidationError("relation pair outside the domain");
    }
    out.preds_[b].push_back(a);
  }
  out.relation = std::move(relation);
  out.elem_rank.assign(domain_size, std::nullopt);

  // Kahn-style propagation: an element becomes well-founded once its last
  // unresolved predecessor does. Elements on or above a cycle never do.
  std::vector<std::size_t> pending(domain_size, 0);
  std::vector<std::vector<Elem>> succs(domain_size);
  for (const auto& [a, b] : out.relation) {
    ++pending[b];
    succs[a].push_back(b);
  }
  std::vector<Elem> ready;
  for (Elem e = 0; e < domain_size; ++e) {
    if (pending[e] == 0) ready.push_back(e);
  }
  std::vector<std::size_t> rank(domain_size, 0);
  while (!ready.empty()) {
    Elem e = ready.back();
    ready.pop_back();
    out.elem_rank[e] = rank[e];
    for (Elem s : succs[e]) {
      rank[s] = std::max(rank[s], rank[e] + 1);
      if (--pending[s] == 0) ready.push_back(s);
    }
  }

  for (Elem e = 0; e < domain_size; ++e) {
    if (out.is_wf(e)) out.wf_elements.push_back(e);
  }
  std::size_t max_rank = 0;
  for (const auto& [a, b] : out.relation) {
    if (!out.is_wf(b)) continue;
    out.wf_pairs.emplace_back(a, b);
    max_rank = std::max({max_rank, *out.elem_rank[a], *out.elem_rank[b]});
  }
  out.height = out.wf_pairs.empty() ? 0 : max_rank + 1;
  return out;
}

}  // namespace asrlogic
