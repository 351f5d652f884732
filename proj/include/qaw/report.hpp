#pragma once

#include "qaw/inductor.hpp"
#include "qaw/numeric.hpp"
#include "qaw/structure.hpp"

#include <json.hpp>

#include <string>

namespace qaw {

enum class Format { text, json };

/// One line of verification output. Every record carries "check" and
/// "status" ("pass" or "fail").
using Record = nlohmann::ordered_json;

Record to_record(const StructureReport& report);
Record to_record(const BandwidthSummary& summary);
Record to_record(const IdentityCertificate& cert, const std::string& check = "proof");
Record to_record(const NumericSummary& summary);

/// Single-line rendering: compact JSON, or space-separated key=value pairs.
std::string render_record(const Record& record, Format format);
bool record_passes(const Record& record);

}  // namespace qaw
