#pragma once

#include "puregaps/codes.hpp"
#include "puregaps/curve.hpp"
#include "puregaps/pure_gaps.hpp"
#include "puregaps/rr_oracle.hpp"
#include "puregaps/tuple.hpp"

#include <json.hpp>

#include <string>

namespace puregaps {

using Json = nlohmann::ordered_json;

Json to_json(const KummerCurve& curve);
KummerCurve curve_from_json(const Json& j);

Json to_json(const Tuple& t);
/// Lexicographically sorted array of integer arrays.
Json to_json(const TupleSet& set);
TupleSet tuple_set_from_json(const Json& j);

Json to_json(const Divisor& d);
Json to_json(const EllResult& result);
Json to_json(const CubeList& cubes);
Json to_json(const CodeParams& params);

/// {"curve": ..., "n": ..., "kind": ..., "elements": [...]}
Json tuple_set_export(const KummerCurve& curve, std::size_t n, const std::string& kind,
                      const TupleSet& set);

std::string big_to_string(const BigInt& value);

}  // namespace puregaps
