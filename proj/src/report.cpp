#include "asrlogic/report.hpp"

#include <fstream>

#include "asrlogic/error.hpp"
#include "asrlogic/parser.hpp"

namespace asrlogic {

using nlohmann::json;

namespace {

json hf_codes(const std::vector<HFSet>& sets) {
  json out = json::array();
  for (HFSet s : sets) out.push_back(s.code());
  return out;
}

json pairs_json(const std::vector<Pair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

json to_json(const DefinabilityReport& report, const Structure& m) {
  json definable = json::array();
  for (const auto& [mask, witness] : report.definable) {
    json members = json::array();
    for (Elem e = 0; e < m.size(); ++e) {
      if ((mask >> e) & 1U) members.push_back(m.label(e));
    }
    definable.push_back({{"mask", mask_to_hex(mask)},
                         {"members", members},
                         {"witness", print_formula(witness)},
                         {"size", ast_size(witness)}});
  }
  json invariant = json::array();
  for (SubsetMask mask : report.invariant) invariant.push_back(mask_to_hex(mask));
  return {{"structure", report.structure},
          {"domain_size", m.size()},
          {"params", report.params},
          {"budget", report.budget},
          {"size_reached", report.size_reached},
          {"definable", definable},
          {"invariant", invariant},
          {"certified", report.certified}};
}

json to_json(const WfAnalysis& wf) {
  json ranks = json::object();
  for (Elem e = 0; e < wf.domain_size; ++e) {
    if (wf.elem_rank[e]) ranks[std::to_string(e)] = *wf.elem_rank[e];
  }
  return {{"domain_size", wf.domain_size},
          {"relation", pairs_json(wf.relation)},
          {"wf_elements", wf.wf_elements},
          {"wf_pairs", pairs_json(wf.wf_pairs)},
          {"elem_rank", ranks},
          {"height", wf.height}};
}

json to_json(const std::vector<RelationHeight>& heights) {
  json out = json::array();
  for (const RelationHeight& rh : heights) {
    json entries = json::array();
    for (const RelationHeightEntry& e : rh.entries) {
      entries.push_back({{"key", e.key}, {"height", e.height}});
    }
    out.push_back({{"index", rh.index},
                   {"entries", entries},
                   {"max_height", rh.max_height}});
  }
  return out;
}

json to_json(const LLevel& level) {
  return {{"base", hf_codes(level.base)},
          {"index", level.index},
          {"size", level.domain.size()},
          {"domain", hf_codes(level.domain)}};
}

json to_json(const GoodnessResult& result) {
  json levels = json::array();
  for (const LevelGoodness& lg : result.levels) {
    json entry = {{"level", lg.level}, {"satisfying", lg.satisfying}};
    entry["witness"] = lg.witness ? json(mask_to_hex(*lg.witness)) : json(nullptr);
    levels.push_back(entry);
  }
  return {{"good", result.good}, {"levels", levels}};
}

json to_json(const GoodnessTable& table) {
  json rows = json::array();
  for (const GoodnessRow& row : table.rows) {
    json p = json::array();
    for (SubsetMask mask : row.p) p.push_back(mask_to_hex(mask));
    rows.push_back({{"code", row.code.to_string()}, {"good", row.good}, {"p", p}});
  }
  return {{"levels", table.levels}, {"rows", rows}};
}

json to_json(const ReflectionReport& report) {
  return {{"top", report.top},
          {"formula", print_formula(report.phi)},
          {"variable", report.var},
          {"reflecting", report.reflecting}};
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

void emit_report(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write report to '" + path + "'");
  out << dump_report(j);
  out.flush();
  if (!out) throw IoError("failed writing report to '" + path + "'");
}

}  // namespace asrlogic
