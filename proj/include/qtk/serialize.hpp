#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtk/csp.hpp"
#include "qtk/garsia_haiman.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/multipoly.hpp"

namespace qtk {

// ordered_json keeps insertion order, so serialized documents are
// byte-stable across runs.
using Json = nlohmann::ordered_json;

// Term list [[coeff, [eq,et,ez,ew]], ...] in canonical term order;
// coefficients as decimal strings.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json table_to_json(const QtKostkaTable& table);
QtKostkaTable table_from_json(const Partition& mu, const Json& j);

Json report_to_json(const CspReport& report);
Json hilbert_to_json(const BigradedHilbert& h);

inline constexpr const char* kCacheFormatVersion = "qtk-cache-v1";

// Cache document: {"format_version": ..., "entries": {mu-key -> {lambda-key
// -> term list}}}. A missing file or a stale format version loads as
// empty; stale caches are ignored, never migrated.
std::vector<QtKostkaTable> load_cache(const std::string& path);
void save_cache(const std::string& path, const std::vector<QtKostkaTable>& tables);

}  // namespace qtk
