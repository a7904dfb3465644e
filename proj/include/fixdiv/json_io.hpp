// JSON forms for every value that crosses the CLI boundary.  Field order is
// fixed (ordered_json) and big integers are decimal strings, so identical
// inputs serialize byte-identically.

#pragma once

#include "fixdiv/fixdiv.hpp"
#include "fixdiv/ideal.hpp"
#include "fixdiv/matrix.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/ring.hpp"
#include "fixdiv/search.hpp"
#include "fixdiv/selfridge.hpp"

#include <json.hpp>

namespace fixdiv {

using Json = nlohmann::ordered_json;

Json to_json(const RingDesc& ring);
RingDesc ring_from_json(const Json& j);

Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);
Mat mat_from_json(const Json& j, RingDesc ring, int n);  // accepts bare {"rows": ...}

Json to_json(const ScalarPoly& g);
ScalarPoly scalar_poly_from_json(const Json& j);

Json to_json(const MatrixPoly& f);
MatrixPoly matrix_poly_from_json(const Json& j);

Json to_json(const PairReport& r);
Json to_json(const MatrixFixdiv& r);
Json to_json(const ConditionReport& r);
Json to_json(const SearchReport& r);
Json to_json(const NormBound& b);
Json to_json(const BSearchReport& r);

}  // namespace fixdiv
