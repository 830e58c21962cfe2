#pragma once

// JSON exchange formats. All emitters use insertion-ordered objects and a
// fixed layout, so identical inputs serialize to byte-identical documents.

#include <string>

#include <json.hpp>

#include "semifield/isotopy.hpp"
#include "semifield/nuclei.hpp"
#include "semifield/presemifield.hpp"

namespace semifield {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldCtx& f);
FieldCtx field_from_json(const Json& j);

Json carrier_to_json(const Carrier& c);
Carrier carrier_from_json(const Json& j);

/// {"carrier": ..., "structure_constants": [n^3 ints], "aij": [[enc]]|null, "label": str}
Json presemifield_to_json(const Presemifield& s);
Presemifield presemifield_from_json(const Json& j, bool validate = true);

/// {"matrix": [[int]], "qpoly": [enc]|null}; qpoly encodings need the field.
Json linmap_to_json(const LinMap& m, const FieldCtx* qpoly_field = nullptr);
Json mapspace_to_json(const MapSpace& s);

Json orders_to_json(const NucleiOrders& o);
Json report_to_json(const NucleiReport& r);
Json fingerprint_to_json(const Fingerprint& f);

std::string dump_json(const Json& j);

/// Reads and parses a JSON document; path "-" reads standard input.
/// Throws Error(ParseError) on unreadable or malformed input.
Json load_json(const std::string& path);

}  // namespace semifield
