#include "cluster_quake/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>

namespace cluster_quake {

void RunConfig::validate() const {
  if (!(step > 0) || !std::isfinite(step)) throw DomainError("grid step must be positive");
  if (!std::isfinite(range_lo) || !std::isfinite(range_hi) || range_lo > range_hi)
    throw DomainError("grid range must be finite and ordered");
  if (format != "csv" && format != "json") throw DomainError("format must be csv or json");
  if (!(tol >= 0)) throw DomainError("tolerance must be non-negative");
}

ExchangePattern pattern_for(const RunConfig& cfg, std::size_t cap) {
  EnumerateOptions opts;
  opts.cap = cap;
  if (!cfg.matrix_json.empty()) {
    Json j;
    try {
      j = Json::parse(cfg.matrix_json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    return enumerate(exchange_matrix_from_json(j), opts);
  }
  return enumerate(parse_dynkin_type(cfg.type), opts);
}

std::vector<GridRow> plot_grid(const ExchangePattern& p, const RunConfig& cfg) {
  cfg.validate();
  if (p.rank() != 2) throw UnsupportedError("plot grids are only defined in rank 2");
  const PositivePoint g0 = PositivePoint::from_values(p.vertex(cfg.chart).id, cfg.g0);
  const PositivePoint g0_base = positive_transport(g0, p, p.base());
  const auto count = static_cast<std::size_t>(std::floor((cfg.range_hi - cfg.range_lo) / cfg.step + 1e-9)) + 1;
  std::vector<GridRow> rows;
  rows.reserve(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      GridRow r;
      r.x1 = cfg.range_lo + static_cast<double>(a) * cfg.step;
      r.x2 = cfg.range_lo + static_cast<double>(b) * cfg.step;
      const TropicalPoint L{p.base(), {r.x1, r.x2}};
      const EarthquakeResult e = quake(p, g0_base, L, cfg.tol);
      r.cone = e.cone_vertex;
      r.logX1 = e.g.log_X[0];
      r.logX2 = e.g.log_X[1];
      r.u1 = r.logX1 - g0_base.log_X[0];
      r.u2 = r.logX2 - g0_base.log_X[1];
      rows.push_back(r);
    }
  return rows;
}

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows) {
  os << "x1,x2,cone,logX1,logX2,u1,u2\n";
  os << std::setprecision(12);
  for (const auto& r : rows)
    os << r.x1 << ',' << r.x2 << ',' << r.cone << ',' << r.logX1 << ',' << r.logX2 << ',' << r.u1 << ','
       << r.u2 << '\n';
}

std::vector<std::pair<std::vector<double>, std::vector<double>>> reference_tangent_table(const std::string& label) {
  using Row = std::pair<std::vector<double>, std::vector<double>>;
  if (label == "A2")
    return {Row{{1, 0}, {1, 0}}, Row{{0, 1}, {0, 1}}, Row{{-1, 0}, {-1, 0.5}}, Row{{0, -1}, {-2.0 / 3, -2.0 / 3}},
            Row{{1, -1}, {0.5, -1}}};
  if (label == "B2")
    return {Row{{1, 0}, {1, 0}},      Row{{0, 1}, {0, 1}},
            Row{{-1, 0}, {-1, 1}},    Row{{0, -1}, {-0.8, -0.2}},
            Row{{1, -2}, {-1.0 / 3, -4.0 / 3}}, Row{{1, -1}, {0.5, -1}}};
  if (label == "G2")
    return {Row{{1, 0}, {1, 0}},
            Row{{0, 1}, {0, 1}},
            Row{{-1, 0}, {-1, 1.5}},
            Row{{0, -1}, {-8.0 / 9, 1.0 / 3}},
            Row{{1, -3}, {-1.4, -0.6}},
            Row{{1, -2}, {-0.5, -13.0 / 14}},
            Row{{2, -3}, {0, -2}},
            Row{{1, -1}, {0.5, -1}}};
  return {};
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back(Json{{"name", c.name},
                      {"passed", c.passed},
                      {"count", c.count},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance}});
  return Json{{"suite", suite}, {"type", type}, {"passed", passed()}, {"checks", std::move(cs)}};
}

void write_report(std::ostream& os, const VerifyReport& report) {
  os << std::setprecision(3);
  for (const auto& c : report.checks)
    os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << c.name << " n=" << c.count
       << " max=" << c.max_residual << " tol=" << c.tolerance << '\n';
  os << (report.passed() ? "all checks passed" : "some checks FAILED") << '\n';
}

namespace {

class Runner {
 public:
  Runner(const ExchangePattern& p, std::uint64_t seed) : p_(p), rng_(seed) {}

  std::vector<double> uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(p_.rank());
    for (auto& x : v) x = d(rng_);
    return v;
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  void record(VerifyReport& r, std::string name, std::size_t count, double residual, double tol) {
    r.checks.push_back({std::move(name), residual <= tol, count, residual, tol});
  }
  void record_flag(VerifyReport& r, std::string name, std::size_t count, std::size_t failures) {
    r.checks.push_back({std::move(name), failures == 0, count, static_cast<double>(failures), 0.0});
  }

  void matrices(VerifyReport& r) {
    std::size_t dual = 0, fugy = 0, coherent = 0, det = 0, gint = 0, fc = 0, rows = 0;
    for (const auto& v : p_.vertices()) {
      dual += !duality_check(p_, v.id).ok;
      fugy += !fugy_check(p_, v.id).ok;
      coherent += !sign_coherent(v.C);
      det += std::abs(determinant(v.C)) != 1;
      gint += !conjugate_by_diagonal(inverse_unimodular(v.C).transpose(), p_.base_eps().symmetrizer()).has_value();
      fc += !fc_product(p_, v.id, Sign::plus).ok;
      fc += !fc_product(p_, v.id, Sign::minus).ok;
      for (std::size_t k = 0; k < p_.rank(); ++k)
        rows += !(mutate_c_matrix_rows(v.C, v.eps, k) == p_.vertex(v.neighbors[k]).C);
    }
    const std::size_t n = p_.size();
    record_flag(r, "tropical duality", n, dual);
    record_flag(r, "FuGy identity", n, fugy);
    record_flag(r, "sign coherence", n, coherent);
    record_flag(r, "det C = +-1", n, det);
    record_flag(r, "G integrality", n, gint);
    record_flag(r, "F*C non-positive (both signs)", 2 * n, fc);
    record_flag(r, "row recursion matches transport", n * p_.rank(), rows);
  }

  void fan_suite(VerifyReport& r) {
    const auto cones = fan(p_);
    std::size_t failures = 0, overlaps = 0;
    const std::size_t samples = 10000;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto x = uniform(-1, 1);
      try {
        locate_cone({p_.base(), x}, p_);
      } catch (const CompletenessError&) {
        ++failures;
      }
      std::size_t interior = 0;
      for (const auto& c : cones) {
        const auto& inv = p_.vertex(c.vertex_id).C_back_inverse;
        bool inside = true;
        for (std::size_t i = 0; i < p_.rank() && inside; ++i) {
          double y = 0;
          for (std::size_t j = 0; j < p_.rank(); ++j) y += static_cast<double>(inv(i, j)) * x[j];
          inside = y > 1e-9;
        }
        interior += inside;
      }
      overlaps += interior > 1;
    }
    record_flag(r, "fan completeness", samples, failures);
    record_flag(r, "cone interiors disjoint", samples, overlaps);
    r.checks.push_back({"maximal cones", true, cones.size(), 0.0, 0.0});
  }

  PositivePoint random_g() { return PositivePoint{p_.base(), uniform(-2, 2)}; }
  TropicalPoint random_L() { return TropicalPoint{p_.base(), uniform(-5, 5)}; }

  void earthquake(VerifyReport& r) {
    double round = 0, flow = 0, glue = 0, reduce = 0;
    std::size_t regions_bad = 0, reduce_count = 0;
    const std::size_t samples = 1000;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto g0 = random_g();
      const auto L = random_L();
      const auto g = quake(p_, g0, L).g;
      const auto back = inverse_quake(p_, g0, g).x;
      for (std::size_t i = 0; i < L.x.size(); ++i) round = std::max(round, std::abs(back[i] - L.x[i]));
      regions_bad += earthquake_regions(p_, g0, g).size() > 1;

      const double a = real(0.1, 2), b = real(0.1, 2);
      const auto direct = quake(p_, g0, scale(L, a + b)).g.log_X;
      const auto stepped = quake(p_, quake(p_, g0, scale(L, a)).g, scale(L, b)).g.log_X;
      for (std::size_t i = 0; i < direct.size(); ++i) flow = std::max(flow, std::abs(direct[i] - stepped[i]));

      // a point on the wall between v and mu_k(v)
      const std::size_t v = index(p_.size()), k = index(p_.rank());
      TropicalPoint wall{v, uniform(0, 3)};
      wall.x[k] = 0;
      const auto via_v = pre_earthquake(p_, g0, wall, v).log_X;
      const auto via_w = pre_earthquake(p_, g0, wall, p_.vertex(v).neighbors[k]).log_X;
      for (std::size_t i = 0; i < via_v.size(); ++i) glue = std::max(glue, std::abs(via_v[i] - via_w[i]));
    }
    if (p_.rank() >= 2) {
      std::vector<std::size_t> J;
      for (std::size_t j = 0; j + 1 < p_.rank(); ++j) J.push_back(j);
      for (std::size_t s = 0; s < 100; ++s) {
        // random point in the star of the face fixed by J: cone of a J-reachable vertex
        std::size_t v = p_.base();
        for (int hop = 0; hop < 6; ++hop) v = p_.vertex(v).neighbors[J[index(J.size())]];
        const TropicalPoint L{v, uniform(0, 3)};
        reduce = std::max(reduce, cluster_reduce(p_, p_.base(), J, random_g(), L));
        ++reduce_count;
      }
    }
    record(r, "inverse_quake o quake = id", samples, round, 1e-9);
    record_flag(r, "earthquake regions disjoint", samples, regions_bad);
    record(r, "flow additivity", samples, flow, 1e-9);
    record(r, "gluing across walls", samples, glue, 1e-9);
    if (reduce_count) record(r, "cluster reduction", reduce_count, reduce, 1e-10);
  }

  void derivatives(VerifyReport& r) {
    double diff = 0, linear = 0;
    const std::size_t samples = 200;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto g = random_g();
      const std::size_t v = index(p_.size());
      const TropicalPoint L1{v, uniform(0.1, 3)}, L2{v, uniform(0.1, 3)};
      const auto a = dquake(p_, g, L1).delta;
      const auto f = dquake(p_, g, L1, DerivativeMethod::finite_difference).delta;
      for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - f[i]));
      TropicalPoint sum{v, L1.x};
      for (std::size_t i = 0; i < sum.x.size(); ++i) sum.x[i] += L2.x[i];
      const auto b = dquake(p_, g, L2).delta;
      const auto c = dquake(p_, g, sum).delta;
      for (std::size_t i = 0; i < a.size(); ++i) linear = std::max(linear, std::abs(a[i] + b[i] - c[i]));
    }
    record(r, "analytic vs finite difference", samples, diff, 1e-6);
    record(r, "linearity within a cone", samples, linear, 1e-9);

    const auto table = reference_tangent_table(p_.type_tag());
    if (!table.empty() && p_.base_eps() == build_cartan_seed(parse_dynkin_type(p_.type_tag()))) {
      double err = 0;
      const PositivePoint g{p_.base(), std::vector<double>(p_.rank(), 0.0)};
      for (const auto& [l, xi] : table) {
        const auto d = dquake(p_, g, {p_.base(), l}).delta;
        for (std::size_t i = 0; i < d.size(); ++i) err = std::max(err, std::abs(d[i] - xi[i]));
      }
      record(r, "tangent table", table.size(), err, 1e-6);
    }
  }

  void limits(VerifyReport& r) {
    const PositivePoint g0{p_.base(), std::vector<double>(p_.rank(), 0.0)};
    double errL = 0;
    std::size_t nonmonotone = 0;
    for (const auto& v : p_.vertices())
      for (std::size_t k = 0; k < p_.rank(); ++k) {
        const double e10 = limit_L(p_, g0, v.id, k, 10).error;
        const double e100 = limit_L(p_, g0, v.id, k, 100).error;
        const double e1000 = limit_L(p_, g0, v.id, k, 1000).error;
        errL = std::max(errL, e1000);
        nonmonotone += !(e100 <= e10 && e1000 <= e100);
      }
    record(r, "limit L at t=1000", p_.size() * p_.rank(), errL, 1e-2);
    record_flag(r, "limit L error non-increasing", p_.size() * p_.rank(), nonmonotone);

    double err10 = 0, err30 = 0;
    for (const auto& v : p_.vertices()) {
      err10 = std::max(err10, limit_g(p_, {p_.base(), std::vector<double>(p_.rank(), 10.0)}, v.id).error);
      err30 = std::max(err30, limit_g(p_, {p_.base(), std::vector<double>(p_.rank(), 30.0)}, v.id).error);
    }
    record(r, "limit g at M=30", p_.size(), err30, 1e-3);
    r.checks.push_back({"limit g improves from M=10", err30 < err10 || err10 == 0, p_.size(), err30, err10});
  }

  void horocycle(VerifyReport& r) {
    double conj = 0, compat = 0, invol = 0;
    const std::size_t samples = 1000;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto g = random_g();
      const TropicalPoint L{index(p_.size()), uniform(0.05, 3)};
      conj = std::max(conj, conjugacy_residual(p_, g, L, real(0.01, 5)));

      const std::size_t v = index(p_.size()), k = index(p_.rank());
      CentralCharge Z{v, {}};
      for (std::size_t i = 0; i < p_.rank(); ++i) Z.z.emplace_back(real(-3, 3), real(0.1, 3));
      Z.z[k] = {real(0.1, 3) * (index(2) ? 1.0 : -1.0), 0.0};
      compat = std::max(compat, glue_flow_residual(Z, p_, k, real(-3, 3)));
      const auto twice = glue(glue(Z, p_, k), p_, k);
      invol = std::max(invol, max_abs_difference(twice, Z));
    }
    record(r, "earthquake/horocycle conjugacy", samples, conj, 1e-10);
    record(r, "glue commutes with h_t", samples, compat, 1e-12);
    record(r, "glue involutive", samples, invol, 1e-12);
  }

 private:
  const ExchangePattern& p_;
  std::mt19937_64 rng_;
};

}  // namespace

VerifyReport verify(const std::string& suite, const ExchangePattern& p, std::uint64_t seed) {
  static const std::set<std::string> known{"matrices", "fan", "earthquake", "derivatives", "limits", "horocycle", "all"};
  if (!known.count(suite)) throw DomainError("unknown verification suite '" + suite + "'");
  VerifyReport report{suite, p.type_tag(), {}};
  Runner run(p, seed);
  const bool all = suite == "all";
  if (all || suite == "matrices") run.matrices(report);
  if (all || suite == "fan") run.fan_suite(report);
  if (all || suite == "earthquake") run.earthquake(report);
  if (all || suite == "derivatives") run.derivatives(report);
  if (all || suite == "limits") run.limits(report);
  if (all || suite == "horocycle") run.horocycle(report);
  return report;
}

}  // namespace cluster_quake
