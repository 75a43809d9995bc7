#include "cluster_quake/serialization.hpp"

namespace cluster_quake {

Json to_json(const IntMatrix& m) { return m.to_rows(); }
Json to_json(const RealMatrix& m) { return m.to_rows(); }

Json to_json(const ExchangeMatrix& eps) {
  return Json{{"n", eps.size()}, {"entries", to_json(eps.entries())}, {"d", eps.symmetrizer()}};
}

Json to_json(const FPolynomial& f) {
  Json out = Json::array();
  for (const auto& [exp, coef] : f.terms()) out.push_back(Json{{"exp", exp}, {"coef", coef}});
  return out;
}

Json to_json(const FTuple& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

Json to_json(const TropicalPoint& L) { return Json{{"chart", L.chart}, {"coords", L.x}}; }

Json to_json(const PositivePoint& g) {
  return Json{{"chart", g.chart}, {"coords", g.values()}, {"log_coords", g.log_X}};
}

Json to_json(const CentralCharge& Z) {
  Json z = Json::array();
  for (const auto& c : Z.z) z.push_back({c.real(), c.imag()});
  return Json{{"chart", Z.chart}, {"z", z}};
}

Json to_json(const ExchangePattern& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) {
    vertices.push_back(Json{{"id", v.id},
                            {"path", v.path},
                            {"eps", to_json(v.eps.entries())},
                            {"C", to_json(v.C)},
                            {"G", to_json(v.G)},
                            {"F", to_json(v.F)},
                            {"f_matrix", to_json(v.f_mat)}});
  }
  Json edges = Json::array();
  for (const auto& e : p.edges()) {
    Json je{{"from", e.from}, {"to", e.to}};
    if (e.kind == EdgeKind::mutation) {
      je["kind"] = "mutation";
      je["direction"] = e.direction;
    } else {
      je["kind"] = "permutation";
      je["transposition"] = {e.transposition.first, e.transposition.second};
    }
    edges.push_back(std::move(je));
  }
  return Json{{"type", p.type_tag()},
              {"base", p.base()},
              {"base_eps", to_json(p.base_eps())},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

Json to_json(const std::vector<Cone>& cones) {
  Json out = Json::array();
  for (const auto& c : cones) out.push_back(Json{{"vertex", c.vertex_id}, {"generators", to_json(c.generators.transpose())}});
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  try {
    auto rows = j.get<std::vector<std::vector<Int>>>();
    return IntMatrix::from_rows(rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad integer matrix: ") + e.what());
  }
}

ExchangeMatrix exchange_matrix_from_json(const Json& j) {
  if (j.is_array()) return ExchangeMatrix(int_matrix_from_json(j));
  if (!j.is_object() || !j.contains("entries")) throw ParseError("exchange matrix JSON needs an \"entries\" field");
  IntMatrix m = int_matrix_from_json(j.at("entries"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != m.rows()) throw ParseError("\"n\" disagrees with entries");
  if (j.contains("d")) return ExchangeMatrix(std::move(m), j.at("d").get<std::vector<Int>>());
  return ExchangeMatrix(std::move(m));
}

FPolynomial fpolynomial_from_json(const Json& j, std::size_t nvars) {
  FPolynomial::Terms terms;
  try {
    for (const auto& t : j) terms[t.at("exp").get<std::vector<int>>()] += t.at("coef").get<Int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial: ") + e.what());
  }
  return FPolynomial(nvars, std::move(terms));
}

}  // namespace cluster_quake
