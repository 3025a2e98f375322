#pragma once

// JSON documents for the library's value types.
//
//   LaurentV      {"terms": [[exponent, "coefficient"], ...]}        ascending exponent
//   TorusElement  {"terms": [[i, j, <LaurentV>], ...]}               lexicographic (i, j)
//   PointedElement{"b":..,"c":..,"a":[a1,a2],"grid":[[p,q,<LaurentV>],...]}
//   BasisExpansion{"target":"standard"|"greedy","pointing":[a1,a2],"coeffs":[[a1,a2,<LaurentV>],...]}

#include "qgreedy/bases.hpp"
#include "qgreedy/pointed.hpp"

#include <json.hpp>

namespace qgreedy {

using Json = nlohmann::json;

Json to_json(const LaurentV& f);
Json to_json(const TorusElement& f);
Json to_json(const PointedElement& x);
Json to_json(const BasisExpansion& e);

/// Each parser throws InvalidArgument on a malformed document.
LaurentV laurent_from_json(const Json& j);
TorusElement torus_from_json(const Json& j);
PointedElement pointed_from_json(const Json& j);
BasisExpansion basis_expansion_from_json(const Json& j);

} // namespace qgreedy
