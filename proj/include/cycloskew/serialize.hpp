#pragma once

#include <string>

#include <json.hpp>

#include "cycloskew/constructions.hpp"
#include "cycloskew/diffsets.hpp"
#include "cycloskew/field.hpp"

namespace cycloskew {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

Json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const Json& j);

Json to_json(const Params& params);
Params params_from_json(const Json& j);

/// {kind, field, sets, reference_set, params, pds_type, trivial, ...}
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const Reps& reps);
Reps reps_from_json(const Json& j);

/// Catalog entry without the timestamp; sets are kept only inside certificates.
Json to_json(const Construction& c);
Construction construction_from_json(const Json& j);

/// One JSON-lines record; an empty timestamp omits the field.
std::string catalog_line(const Construction& c, const std::string& timestamp);
Construction parse_catalog_line(const std::string& line);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace cycloskew
