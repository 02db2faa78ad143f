#include "hallforge/json_io.hpp"

#include <sstream>

#include "hallforge/errors.hpp"

namespace hallforge {

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json rational_json(const Rational& v) {
  if (denominator(v) == 1) return big_json(numerator(v));
  std::ostringstream os;
  os << v;
  return os.str();
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["kind"] = a.kind();
  j["name"] = a.name();
  j["field"] = {{"p", a.field()->p()}, {"r", a.field()->r()}};
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Json terms = Json::array();
      for (const auto& t : a.mult(i, k)) terms.push_back({t.k, t.c});
      mult.push_back(std::move(terms));
    }
  j["mult"] = std::move(mult);
  j["unit"] = a.unit();
  Json idem = Json::array();
  for (std::size_t x = 0; x < a.num_vertices(); ++x) idem.push_back({a.vertex_label(x), a.idempotent(x)});
  j["idempotents"] = std::move(idem);
  return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
  try {
    FieldPtr f;
    const auto& fj = j.at("field");
    if (fj.is_number()) f = Field::of_order(fj.get<std::uint64_t>());
    else f = Field::make(fj.at("p").get<std::uint32_t>(), fj.value("r", 1u));
    Algebra::Spec s;
    s.name = j.value("name", std::string("custom"));
    s.kind = "table";
    s.labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = s.labels.size();
    const auto& mj = j.at("mult");
    if (!mj.is_array() || mj.size() != n * n)
      throw InvalidArgument("mult must list " + std::to_string(n * n) + " products");
    for (const auto& cell : mj) {
      std::vector<Term> terms;
      for (const auto& t : cell) {
        auto k = t.at(0).get<std::size_t>();
        auto c = t.at(1).get<std::int64_t>();
        if (k >= n) throw InvalidArgument("basis index out of range in mult");
        Elem e = f->from_int(c);
        if (e != 0) terms.push_back({k, e});
      }
      s.mult.push_back(std::move(terms));
    }
    for (const auto& v : j.at("idempotents")) {
      s.vertex_labels.push_back(v.at(0).get<std::string>());
      auto b = v.at(1).get<std::size_t>();
      if (b >= n) throw InvalidArgument("idempotent index out of range");
      s.vertex_idem.push_back(b);
    }
    auto rep = validate_spec(f, s);
    if (!rep.ok) {
      std::string msg = "algebra table fails validation:";
      for (const auto& e : rep.failures) msg += " " + e + ";";
      throw InvalidArgument(msg);
    }
    return Algebra::make(f, std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json certificate_json(const HallPolynomial& g) {
  Json j;
  j["algebra"] = g.algebra;
  j["triple"] = {g.x, g.y, g.m};
  Json pts = Json::array();
  for (const auto& [q, v] : g.points) pts.push_back({q, big_json(v)});
  j["points"] = std::move(pts);
  Json poly = Json::array();
  for (const auto& c : g.poly.c) poly.push_back(big_json(c));
  j["poly"] = std::move(poly);
  Json shifted = Json::array();
  for (const auto& c : g.poly.shifted_at_one()) shifted.push_back(big_json(c));
  j["poly_at_x_minus_1"] = std::move(shifted);
  Json hold = Json::array();
  for (const auto& [q, v, ok] : g.holdout) hold.push_back({q, big_json(v), ok});
  j["holdout"] = std::move(hold);
  j["skipped"] = g.skipped;
  j["certified"] = g.ok;
  if (!g.ok) j["message"] = g.message;
  j["case"] = g.lemma_case;
  return j;
}

Json hall_element_json(HallAlgebra& h, const HallElement& x) {
  Json j = Json::object();
  for (const auto& [c, v] : x) j[h.registry().name(c)] = big_json(v);
  return j;
}

Json degen_json(const DegenElement& e) {
  Json terms = Json::object();
  for (const auto& [k, v] : e.terms) terms[k] = rational_json(v);
  Json prov = Json::object();
  for (const auto& [k, p] : e.provenance) {
    Json pj = Json::array();
    for (const auto& c : p.c) pj.push_back(rational_json(c));
    const auto& info = e.keys.at(k);
    prov[k] = {{"poly", std::move(pj)},
               {"indecomposable", info.indecomposable},
               {"bundle", info.bundled},
               {"members", info.members.to_string()}};
  }
  return {{"terms", std::move(terms)}, {"coefficients", std::move(prov)}, {"text", e.to_string()}};
}

}  // namespace hallforge
