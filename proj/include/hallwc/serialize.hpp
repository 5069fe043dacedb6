/**
 * @file serialize.hpp
 * @brief JSON records for inputs and outputs. Rationals are "p/q" strings.
 */
#pragma once

#include <json.hpp>

#include "hallwc/freewall.hpp"
#include "hallwc/multilaurent.hpp"
#include "hallwc/series.hpp"
#include "hallwc/torus.hpp"

namespace hallwc {

using Json = nlohmann::ordered_json;

Json to_json(const BigRational& r);
/// {"text", "num": [[exp, n, d], ...], "den": [...]} with integers too large
/// for 64 bits written as decimal strings.
Json to_json(const RatFunc& f);
Json to_json(const LaurentPoly& p);
/// [[[e_1..e_n], "c"], ...] in increasing monomial order.
Json to_json(const MultiLaurent& p);
Json to_json(const DimVector& d);
Json to_json(const Word& w);
Json to_json(const SeriesWindow& s);
Json to_json(const SlopeFunction& mu);
/// [{"tuple": [...], "value": "p/q"}, ...]; `min_length` drops shorter tuples.
Json to_json(const CoeffTable& t, std::size_t min_length = 1);

/// {"vertices": [labels], "arrows": [[src, dst], ...]}, endpoints as labels or indices.
Quiver quiver_from_json(const Json& j);
Json to_json(const Quiver& q);
/// {"theta": [...], "kappa": [...], "tiers": [{"theta", "kappa"}, ...]}; kappa defaults to all ones.
SlopeFunction stability_from_json(const Json& j, std::size_t nvertices);

struct PathSpec {
    std::vector<HopSpec> hops;
    DimVector bound;
};
/// {"hops": [{"wall": stability, "side": stability, "direction"?}], "bound": [ints]}
PathSpec path_from_json(const Json& j);

}  // namespace hallwc
