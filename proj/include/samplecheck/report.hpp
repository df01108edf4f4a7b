#pragma once

#include <json.hpp>

#include "samplecheck/tester.hpp"
#include "samplecheck/transform.hpp"

namespace samplecheck {

/// Verdict record as printed by `samplecheck test`; layout documented in the
/// README.
nlohmann::json verdict_to_json(const Verdict& v, const TestParams& p);

nlohmann::json transform_report_to_json(const TransformResult& r);

}  // namespace samplecheck
