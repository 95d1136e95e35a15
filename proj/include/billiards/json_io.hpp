#pragma once

#include <string>

#include "json.hpp"

#include "billiards/filling.hpp"
#include "billiards/optimize.hpp"
#include "billiards/polygon.hpp"
#include "billiards/rectangles.hpp"
#include "billiards/trajectory.hpp"

namespace billiards {

using Json = nlohmann::ordered_json;

// Serializer used for all CLI output: floating-point values carry 17
// significant digits so every double round-trips; non-finite values
// become null. Layout is deterministic given the tree.
std::string dump_json(const Json& j, int indent = 2);

// Parse with the byte offset of the failure in the message.
Json parse_json(const std::string& text);

Json polygon_to_json(const IdealPolygon& P);          // {"k":.., "theta":[..]}
IdealPolygon polygon_from_json(const Json& j);

Json chart_to_json(const ModuliChart& chart);
ModuliChart chart_from_json(const Json& j);

Json trajectory_to_json(const Trajectory& t);
Json family_to_json(const CyclicFamily& fam);
Json filling_to_json(const FillingReport& r);
Json minimization_to_json(const MinimizationResult& r);
Json regular_report_to_json(const RegularMinimumReport& r);

}  // namespace billiards
