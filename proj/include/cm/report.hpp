#pragma once

#include "cm/measures.hpp"
#include "cm/mus.hpp"
#include "cm/mus_graph.hpp"
#include "cm/postulates.hpp"

#include <json.hpp>

#include <string>

namespace cm {

using Json = nlohmann::ordered_json;

Json to_json(const IndexSet &s);
/// Measure report with flat keys; `time_ms` is left out when timing is off.
Json to_json(const MeasureReport &r, bool timing = true);
Json to_json(const Decomposition &dec);
Json to_json(const PartialMusDecomposition &dec);
Json to_json(const RepairReport &r);
Json to_json(const PostulateReport &r);

/// Two-column `name value` table.
std::string plain_table(const MeasureReport &r, bool timing = true);

/// Inverse of to_json(MeasureReport) for the measure fields.
MeasureReport measure_report_from_json(const Json &j);

} // namespace cm
