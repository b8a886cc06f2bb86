#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "solenoid/circlemaps.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/hull.hpp"
#include "solenoid/induced.hpp"

namespace solenoid::io {

using Json = nlohmann::ordered_json;

/// {"degree": n, "variant": "pl", "breakpoints": [["0","1/2"], ...]} or
/// {"degree": n, "variant": "analytic", "alpha": a, "terms": [[a_j, T_j], ...]}.
/// Rationals are "p/q" strings; integers are accepted as well. Throws
/// Error{kParse} on schema violations and propagates validation errors.
CircleLift parse_map(const Json& j);
Json map_to_json(const CircleLift& f);

/// {"degree": n, "offset": m, "lift": <map>}; a bare map descriptor is read
/// as the induced map with offset 0.
InducedHomeo parse_homeo(const Json& j);
Json homeo_to_json(const InducedHomeo& f);

/// {"lp": {"tower": [1, 2, 6], "summands": [[["0","0"], ...], ...],
///         "tail_bound": "1/48"}}; each summand lists (x, value) knots on
/// [0, T_j).
LimitPeriodicHomeo parse_lp(const Json& j);
Json lp_to_json(const LimitPeriodicHomeo& h);

using AnyHomeo = std::variant<InducedHomeo, LimitPeriodicHomeo>;
AnyHomeo parse_any_homeo(const Json& j);

/// {"lo": "p/q", "hi": "p/q", "exact": "p/q" | null, "witness": "p/q" | null, ...}
Json enclosure_to_json(const RotationEnclosure& e);
/// {"max_error": "0", "exact": true, "samples": N, "period": "T"}
Json semiconjugacy_to_json(const SemiconjugacyReport& r);

Json rational_json(const Rational& r);
Rational parse_rational_json(const Json& j);

/// Reads and parses a JSON file; Error{kParse} on I/O or syntax failure.
Json load_json(const std::filesystem::path& path);

}  // namespace solenoid::io
