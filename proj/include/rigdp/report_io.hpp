#pragma once

#include "rigdp/invariants.hpp"
#include "rigdp/search.hpp"

#include <json.hpp>

#include <string>

namespace rigdp {

// One JSON object per report. Rationals are "p/q" strings; absent values are omitted.
nlohmann::json report_to_json(const SurfaceReport& r);
SurfaceReport report_from_json(const nlohmann::json& j);
std::string report_line(const SurfaceReport& r);  // compact, no trailing newline

// Tab-separated table, same columns as the reference tables.
std::string tsv_header(int codim);
std::string tsv_row(const SurfaceReport& r);

nlohmann::json checkpoint_to_json(const SearchCheckpoint& c);
SearchCheckpoint checkpoint_from_json(const nlohmann::json& j);

Verdict verdict_from_name(const std::string& s);

}  // namespace rigdp
