#pragma once

// JSON forms of the library's values.
//
//   Family:         {"n": 4, "d": 3, "tuples": [[[1], [], [2]], ...]}
//   SubspaceFamily: {"n": 3, "d": 3, "entries": [[[["1","0","0"]], ...], ...]}
//   Blade:          {"n": 3, "k": 2, "coords": ["1", "1", "0"]}
//
// Elements are 1-based and each element list is sorted ascending.
// Rationals are "p/q" strings in lowest terms ("p" when q = 1).

#include "bollobas/certificate.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/events.hpp"
#include "bollobas/exterior.hpp"
#include "bollobas/family.hpp"
#include "bollobas/search.hpp"

#include <nlohmann/json.hpp>

namespace bollobas {

using Json = nlohmann::json;

Json to_json(const DTuple& t);
Json to_json(const Family& f);
/// Throws ParseError for malformed documents (with the offending field) and
/// the family-core errors for invalid tuples.
Family family_from_json(const Json& j);

Json to_json(const RationalMatrix& m);
Json to_json(const SubspaceFamily& f);
SubspaceFamily subspace_family_from_json(const Json& j);

Json to_json(const Blade& b);

Json to_json(const SystemCheck& c);
Json to_json(const SearchResult& r);
Json to_json(const EventReport& r);
Json to_json(const GeneralPositionMap& m);
Json to_json(const Certificate& c);

const char* to_string(EventMode mode);
EventMode event_mode_from_string(std::string_view s);

} // namespace bollobas
