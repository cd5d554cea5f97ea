#pragma once

#include <string>

#include "theta/invariants.hpp"
#include "theta/monoid.hpp"
#include "theta/ring.hpp"
#include "theta/tropical.hpp"

namespace theta::io {

// Geometry JSON:
// {
//   "divisors": ["d1", ...],
//   "strata": [{"id": "...", "labels": [...], "parents": [...]}, ...],
//   "skeleton_coeffs": {"d1": "0", ...},            // optional, default 0
//   "relative": {"multiplicities": {"d1": 1, ...}}, // optional
//   "classes": {
//     "h2_rank": n,
//     "pairing_matrix": {"d1": [ints], ...},
//     "c1": [ints],
//     "flag": "nef" | "antinef" | "logcy",
//     "logcy_coeffs": {"d1": "0", ...},             // optional, default 0
//     "class_monoid": {"generators": [[ints]], "phi": [ints]},
//     "ideal": {"generators": [[ints]]} or {"threshold": k}
//   }
// }
Geometry load_geometry(const std::string& path);

// Invariant table: JSON lines
//   {"A":[ints],"p1":{"cone":id,"coords":{label:int}},"p2":...,"r":...,"N":"n/d"}
// with an optional leading {"policy":"complete"|"strict"} line.
InvariantTable load_table(const Geometry& g, const std::string& path);

// Presentation JSON:
// {
//   "vars": ["v1", ...],
//   "points": {"v1": {"cone": id, "coords": {...}}, ...},
//   "relations": [{"lead": {"v1": 1, ...},
//                  "replacement": [{"class": [ints], "value": "n/d",
//                                   "monomial": {...}}, ...]}, ...]
// }
RingPresentation load_presentation(const Geometry& g, const std::string& path);

// Tropical family JSON:
// {
//   "complex": {"divisors": [...], "strata": [...]},
//   "graph": {"vertices": [{"name","bsigma"}],
//             "edges": [{"name","src","dst","bsigma","u":[ints]}],
//             "legs": [{"label","vertex","bsigma","u":[ints],"bounded"?}]},
//   "base": {"generators": ["delta", ...]},
//   "nu": {"V1": [[ints per base coord] per divisor], ...},
//   "lengths": {"E1": [ints], ...},
//   "delta": [ints],   // optional
//   "r": [ints]        // optional
// }
TropFamily load_tropical(const std::string& path);

// Monoid JSON: {"rank": r, "generators": [[ints]]}.
ToricMonoid load_monoid(const std::string& path);

IntegralPoint parse_point(const Geometry& g, const std::string& text);
std::string point_json(const IntegralPoint& p);
std::string element_json(const ThetaElement& e);

} // namespace theta::io
