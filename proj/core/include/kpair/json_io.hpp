// JSON documents for patterns, certificates, transcripts and reports.
//
// Pattern: {"n": int, "E": [int], "X": [int], "Z": [int],
//           "basis": {"<qubit>": "X" | "Y" | "Z"}}
#pragma once

#include <nlohmann/json.hpp>

#include "kpair/locc.hpp"
#include "kpair/netroute.hpp"
#include "kpair/pairability.hpp"
#include "kpair/search.hpp"

namespace kpair::json_io {

using nlohmann::json;

json to_json(const pairability::MeasurementPattern& p);
/// Throws std::invalid_argument naming the offending field.
pairability::MeasurementPattern pattern_from_json(const json& j);

/// {"f": ["0110..."], "fbar": [...]}, witnesses as bit strings in label order.
json to_json(const pairability::CssCertificate& c);
pairability::CssCertificate certificate_from_json(const json& j);

json to_json(const PairList& pairs);
json to_json(const locc::ProtocolTranscript& t);
json to_json(const netroute::RoutePlan& plan);
json to_json(const search::PairabilityReport& r);

/// Checks the pattern schema: required keys, integer arrays, basis letters.
bool is_valid_pattern_json(const json& j);

}  // namespace kpair::json_io
