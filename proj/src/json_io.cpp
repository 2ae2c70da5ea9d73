#include "puregaps/json_io.hpp"

#include <stdexcept>

namespace puregaps {

std::string big_to_string(const BigInt& value) { return value.str(); }

Json to_json(const KummerCurve& curve) {
  return Json{{"m", curve.m()}, {"r", curve.r()}, {"lambda", curve.lambda()},
              {"genus", curve.genus()}};
}

KummerCurve curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("r"))
    throw std::invalid_argument("curve JSON needs integer fields m and r");
  const Int lambda = j.contains("lambda") ? j.at("lambda").get<Int>() : 1;
  KummerCurve c = new_kummer(j.at("m").get<Int>(), j.at("r").get<Int>(), lambda);
  if (j.contains("genus") && j.at("genus").get<Int>() != c.genus())
    throw std::invalid_argument("curve JSON genus does not match (m, r)");
  return c;
}

Json to_json(const Tuple& t) {
  Json a = Json::array();
  for (Int v : t) a.push_back(v);
  return a;
}

Json to_json(const TupleSet& set) {
  Json a = Json::array();
  for (const Tuple& t : set) a.push_back(to_json(t));
  return a;
}

TupleSet tuple_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tuple set JSON must be an array");
  TupleSet out;
  for (const Json& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tuple JSON must be an array");
    out.insert(Tuple(row.get<std::vector<Int>>()));
  }
  return out;
}

Json to_json(const Divisor& d) {
  Json o = Json::object();
  for (const auto& [place, c] : d.coefficients()) o[place.label()] = c;
  return o;
}

Json to_json(const EllResult& result) {
  return Json{{"dim", result.dim}, {"per_residue", result.per_residue}};
}

Json to_json(const CubeList& cubes) {
  Json list = Json::array();
  for (const Cube& c : cubes.cubes) {
    // counts are tiny in practice, but keep them exact
    Json count = c.count <= BigInt(INT64_MAX) ? Json(static_cast<Int>(c.count))
                                               : Json(big_to_string(c.count));
    list.push_back(Json{{"origin", to_json(c.origin)}, {"side", c.side}, {"count", count},
                        {"class", c.level}});
  }
  return Json{{"cubes", list}, {"lambda_star", to_json(cubes.lambda_star)}};
}

Json to_json(const CodeParams& p) {
  return Json{{"N", p.length},
              {"kdim", p.dimension},
              {"dlb", p.distance_bound},
              {"degG", p.deg_g},
              {"ratesum", std::to_string(p.rate_sum.numerator()) + "/" +
                              std::to_string(p.rate_sum.denominator())},
              {"flagged", p.flagged}};
}

Json tuple_set_export(const KummerCurve& curve, std::size_t n, const std::string& kind,
                      const TupleSet& set) {
  return Json{{"curve", to_json(curve)}, {"n", n}, {"kind", kind}, {"elements", to_json(set)}};
}

}  // namespace puregaps
