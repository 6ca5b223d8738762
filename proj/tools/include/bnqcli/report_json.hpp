#pragma once

// JSON shapes for the verification report and the tabular command outputs.
// Field names here are the stable interface; tests round-trip them.

#include <json.hpp>

#include "bnq/maps.hpp"
#include "bnq/modularity.hpp"
#include "bnq/varieties.hpp"

namespace bnqcli {

nlohmann::json report_to_json(const bnq::VerificationReport& rep);
bnq::VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json count_row_to_json(const bnq::CountRecord& rec, bool twisted);
nlohmann::json roundtrip_to_json(const bnq::RoundtripReport& rep);
nlohmann::json cayley_to_json(const bnq::CayleyCount& c, std::int64_t c2);

}  // namespace bnqcli
