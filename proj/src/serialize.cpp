#include "hankel/serialize.hpp"

#include <stdexcept>

namespace hankel {

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return parse_rat(j.get<std::string>());
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

Json to_json(const SeriesYX& s) {
  Json cs = Json::array();
  for (const auto& p : s.coeffs()) cs.push_back(to_json(p));
  return Json{{"order", s.order()}, {"coeffs", cs}};
}

SeriesYX series_from_json(const Json& j) {
  int order = j.at("order").get<int>();
  std::vector<Poly> cs;
  for (const auto& e : j.at("coeffs")) cs.push_back(poly_from_json(e));
  if (static_cast<int>(cs.size()) != order + 1)
    throw std::invalid_argument("series coefficient count does not match order");
  return SeriesYX(order, std::move(cs));
}

}  // namespace hankel
