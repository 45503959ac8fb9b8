#pragma once

#include <json.hpp>
#include <string>

#include "momentkit/certify.hpp"
#include "momentkit/hausdorff1d.hpp"
#include "momentkit/moments.hpp"
#include "momentkit/vnorm.hpp"

namespace momentkit {

/// Canonical serialization: sorted object keys (nlohmann default), two-space
/// indent, trailing newline, shortest round-trip float text. Identical values
/// always produce identical bytes.
std::string dump_json(const nlohmann::json& value);

/// Parses with position-annotated errors (line and column on failure).
nlohmann::json parse_json(const std::string& text);

nlohmann::json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const nlohmann::json& j);

nlohmann::json moments_to_json(const MomentSequence& L);
MomentSequence moments_from_json(const nlohmann::json& j);

nlohmann::json sequence_to_json(const Sequence1D& f);
Sequence1D sequence_from_json(const nlohmann::json& j);

nlohmann::json recovered_to_json(const Recovered1D& recovered);

nlohmann::json vnorm_to_json(const VnormEstimate& estimate);

nlohmann::json certificate_to_json(const Certificate& certificate);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json psd_report_to_json(const PsdReport& report);
nlohmann::json cone_report_to_json(const ConeCheckReport& report);
nlohmann::json ball_report_to_json(const BallCheckReport& report);

}  // namespace momentkit
