#pragma once

#include <json.hpp>
#include <string>

#include "asrlogic/asr_eval.hpp"
#include "asrlogic/definability.hpp"
#include "asrlogic/l_hierarchy.hpp"
#include "asrlogic/reflection.hpp"
#include "asrlogic/structure.hpp"
#include "asrlogic/wf.hpp"

namespace asrlogic {

// JSON views of the library's reports. nlohmann::json objects keep keys
// sorted, so dumps are deterministic.

nlohmann::json to_json(const DefinabilityReport& report, const Structure& m);
nlohmann::json to_json(const WfAnalysis& wf);
nlohmann::json to_json(const std::vector<RelationHeight>& heights);
nlohmann::json to_json(const LLevel& level);
nlohmann::json to_json(const GoodnessResult& result);
nlohmann::json to_json(const GoodnessTable& table);
nlohmann::json to_json(const ReflectionReport& report);

/// Two-space indented dump with a trailing newline.
std::string dump_report(const nlohmann::json& j);

/// Writes `j` to `path`; raises IoError when the file cannot be written.
void emit_report(const nlohmann::json& j, const std::string& path);

}  // namespace asrlogic
