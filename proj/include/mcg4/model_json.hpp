#pragma once

#include "mcg4/james.hpp"
#include "mcg4/mcg.hpp"

#include <string>

namespace mcg4 {

// JSON schema (README documents it):
// { "name": string, "gram": [[int]], "spin": bool, "boundary_components": int,
//   "components": optional [ { "label": string, "heegaard_genus": int?,
//       "admits_gdt": "yes"|"no"|"unknown", "seifert_base_genus": int?,
//       "seifert_euler": [int, int]? } ] }
ManifoldModel model_from_json_text(const std::string& text);
std::string model_to_json_text(const ManifoldModel& m, int indent = 2);

std::string report_to_json_text(const MCGReport& r, int indent = 2);
MCGReport report_from_json_text(const std::string& text);
std::string report_to_text(const MCGReport& r);

std::string ss_report_to_json_text(const SSReport& r, int indent = 2);
std::string ss_report_to_text(const SSReport& r);

}  // namespace mcg4
