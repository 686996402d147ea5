#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ramicalc/betti_bounds.hpp"
#include "ramicalc/conductor.hpp"
#include "ramicalc/curves.hpp"
#include "ramicalc/geometry.hpp"
#include "ramicalc/poly.hpp"
#include "ramicalc/rat.hpp"

namespace ramicalc {

using Json = nlohmann::ordered_json;

// Rat <-> "num/den" string ("/den" omitted when 1).
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// Poly <-> array of coefficient strings, lowest degree first.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// [{"slope":"3/2","rank":2}, ...], slopes ascending.
Json slopes_to_json(const SlopeDecomposition& d);
SlopeDecomposition slopes_from_json(const Json& j);

// {"rank":N,"perfect_residue":bool,"log":[...],"nonlog":[...]|null}
Json module_to_json(const GaloisModuleData& m);
GaloisModuleData module_from_json(const Json& j);

// {"components":{"D":"3","E":"5/2"}}
Json divisor_to_json(const QWeilDivisor& d);
QWeilDivisor divisor_from_json(const Json& j);

// {"name":"O_D","fibers":{"s0":{...divisor...}}}
Json token_to_json(const CoherentToken& t);
CoherentToken token_from_json(const Json& j);

// {"terms":[{"coeff":"7/2","token":{...}}]}
Json combo_to_json(const CoherentCombo& c);
CoherentCombo combo_from_json(const Json& j);

// {"genus":0,"generic_rank":1,"bad_points":[{"label":"inf","dimtot":"4","stalk_rank":0}]}
Json curve_to_json(const CurveSheafData& d);
CurveSheafData curve_from_json(const Json& j);

// Array of coefficient arrays, one per cohomological degree.
Json family_to_json(const BoundFamily& f);
BoundFamily family_from_json(const Json& j);

// [{"n":3,"step":"b<=c","certified":true}, ...]
Json chain_report_to_json(const ChainReport& r);

// Parses a whole file; throws std::invalid_argument on unreadable or
// malformed content.
Json load_json_file(const std::string& path);

} // namespace ramicalc
