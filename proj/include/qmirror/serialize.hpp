#pragma once

#include "qmirror/series.hpp"
#include "qmirror/upoly.hpp"

#include <json.hpp>

namespace qmirror {

using Json = nlohmann::ordered_json;

/// {"terms": [{"two_pi_i_pow": int, "zeta3": 0|1, "coeff": "p/q"}]}
Json to_json(const ConstScalar& c);
ConstScalar const_scalar_from_json(const Json& j);

/// {"var": "z"|"q", "order2": int, "coeffs": [{"m2": int, "logpow": int, "value": ConstScalar}]}
/// Exact polynomials carry order2 = -1.
Json to_json(const HalfLogSeries& s);
HalfLogSeries series_from_json(const Json& j);

/// {"var": "u", "order2": int, "terms": [{"upow": int, "series": HalfLogSeries}]}
Json to_json(const UPoly& p);
UPoly upoly_from_json(const Json& j);

}  // namespace qmirror
