#pragma once

// JSON encodings.  Hecke elements use
//   {"basis": "T", "params": [L_0..L_r],
//    "terms": [{"element": {"lambda": [...], "w_matrix": [[...]], "omega": k},
//               "coeff": {"<exp>": c, ...}}, ...]}
// with terms in (length, element key) order, so equal elements serialise to
// identical text.

#include "json.hpp"

#include "hecke_walks/hecke.hpp"
#include "hecke_walks/walks.hpp"

namespace hw {

using nlohmann::json;

json to_json(const RootDatum& d);
RootDatum datum_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const RootDatum& d, const Hyperplane& h);
Hyperplane hyperplane_from_json(const RootDatum& d, const json& j);

json to_json(const AffineWeylGroup& g, const AffineElement& x);
AffineElement element_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const AffineWeylGroup& g, const Walk& w);
Walk walk_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const HeckeAlgebra& H, const HeckeElement& x);
/// Throws std::invalid_argument on schema errors or a parameter mismatch.
HeckeElement hecke_from_json(const HeckeAlgebra& H, const json& j);

}  // namespace hw
