#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cluster_quake/experiments.hpp"

using namespace cluster_quake;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t vertex_by_path(const ExchangePattern& p, const std::vector<std::size_t>& path) {
  std::size_t v = p.base();
  for (std::size_t k : path) v = p.vertex(v).neighbors[k];
  return v;
}

std::size_t hexagon_triangulations() {
  const int m = 6;
  std::vector<std::pair<int, int>> d;
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b)
      if (!(a == 0 && b == m - 1)) d.emplace_back(a, b);
  auto cross = [](auto x, auto y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  std::size_t count = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      for (std::size_t k = j + 1; k < d.size(); ++k)
        count += !cross(d[i], d[j]) && !cross(d[i], d[k]) && !cross(d[j], d[k]);
  return count;
}

Outcome tangent_tables() {
  const auto start = std::chrono::steady_clock::now();
  struct Row {
    std::vector<double> l, xi;
  };
  const std::map<std::string, std::vector<Row>> tables{
      {"A2", {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{-1, 0}, {-1, 0.5}}, {{0, -1}, {-2.0 / 3, -2.0 / 3}}, {{1, -1}, {0.5, -1}}}},
      {"B2",
       {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{-1, 0}, {-1, 1}}, {{0, -1}, {-4.0 / 5, -1.0 / 5}}, {{1, -2}, {-1.0 / 3, -4.0 / 3}},
        {{1, -1}, {0.5, -1}}}},
      {"G2",
       {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}, {{-1, 0}, {-1, 1.5}}, {{0, -1}, {-8.0 / 9, 1.0 / 3}}, {{1, -3}, {-7.0 / 5, -3.0 / 5}},
        {{1, -2}, {-0.5, -13.0 / 14}}, {{2, -3}, {0, -2}}, {{1, -1}, {0.5, -1}}}}};
  double err = 0;
  std::size_t pairs = 0;
  for (const auto& [label, rows] : tables) {
    const auto p = enumerate(parse_dynkin_type(label));
    const PositivePoint g{p.base(), {0.0, 0.0}};
    for (const auto& r : rows) {
      const auto xi = dquake(p, g, {p.base(), r.l}).delta;
      for (std::size_t i = 0; i < 2; ++i) err = std::max(err, std::abs(xi[i] - r.xi[i]));
      ++pairs;
    }
  }
  const double t = seconds_since(start);
  return {err <= 1e-6 && t < 1.0, std::to_string(pairs) + " pairs, max err " + fmt(err) + ", " + fmt(t) + " s"};
}

Outcome region_formulas() {
  const auto p = enumerate(parse_dynkin_type("A2"));
  using Chart = std::function<std::vector<Rational>(const Rational&, const Rational&)>;
  const std::vector<Chart> charts{
      [](const Rational& a, const Rational& b) { return std::vector<Rational>{a, b}; },
      [](const Rational& a, const Rational& b) { return std::vector<Rational>{1 / a, a * b / (a + 1)}; },
      [](const Rational& a, const Rational& b) { return std::vector<Rational>{b / (a * b + a + 1), (a + 1) / (a * b)}; },
      [](const Rational& a, const Rational& b) { return std::vector<Rational>{(a * b + a + 1) / b, 1 / (a * (b + 1))}; },
      [](const Rational& a, const Rational& b) { return std::vector<Rational>{1 / b, a * (b + 1)}; }};
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < charts.size(); ++s) {
    vertices.push_back(vertex_by_path(p, path));
    path.push_back(s % 2);
  }

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(1, 1000), den(1, 1000);
  std::size_t mismatches = 0;
  for (int s = 0; s < 1000; ++s) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    for (std::size_t c = 0; c < charts.size(); ++c) {
      const auto X = positive_transport(PositiveCoords<Rational>{p.base(), {a, b}}, p, vertices[c]).X;
      mismatches += X != charts[c](a, b);
    }
  }

  const std::vector<Rational> printed{1, 1, 1, Rational(1, 2), Rational(1, 3), 2, 3, Rational(1, 2), 1, 2};
  std::vector<Rational> thresholds;
  for (std::size_t v : vertices)
    for (const auto& x : positive_transport(PositiveCoords<Rational>{p.base(), {1, 1}}, p, v).X) thresholds.push_back(x);
  const bool ok = mismatches == 0 && thresholds == printed;
  return {ok, "5 charts x 1000 rational points, " + std::to_string(mismatches) + " mismatches; thresholds " +
                  (thresholds == printed ? "match" : "differ")};
}

Outcome matrix_identities() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0, failures = 0;
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "D4"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    const auto& d = p.base_eps().symmetrizer();
    for (const auto& v : p.vertices()) {
      const IntMatrix minus_forward = opposite_c_matrix(p, v.id);
      const IntMatrix minus_back = opposite_c_matrix_back(p, v.id);
      const bool duality = v.C_back == inverse_unimodular(minus_forward);
      const bool fugy = v.C_back + p.base_eps().entries() * v.f_back == minus_back;
      const bool coherent = sign_coherent(v.C) && sign_coherent(v.C_back);
      const bool integral = conjugate_by_diagonal(inverse_unimodular(v.C).transpose(), d).has_value();
      failures += !(duality && fugy && coherent && integral);
      ++checked;
    }
  }
  const double t = seconds_since(start);
  return {failures == 0 && t < 30.0,
          std::to_string(checked) + " vertices, " + std::to_string(failures) + " failures, " + fmt(t) + " s"};
}

Outcome earthquake_bijection() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> gd(-2, 2), ld(-5, 5), pos(0.01, 1);
  double worst = 0;
  std::size_t locate_failures = 0, overlaps = 0, misplaced = 0;
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    const auto reps = cone_representatives(p);
    for (int s = 0; s < 1000; ++s) {
      PositivePoint g0{p.base(), {}};
      TropicalPoint L{p.base(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) {
        g0.log_X.push_back(gd(rng));
        L.x.push_back(ld(rng));
      }
      try {
        const auto back = inverse_quake(p, g0, quake(p, g0, L).g).x;
        for (std::size_t i = 0; i < p.rank(); ++i) worst = std::max(worst, std::abs(back[i] - L.x[i]));
      } catch (const CompletenessError&) {
        ++locate_failures;
      }
    }
    const PositivePoint g0{p.base(), std::vector<double>(p.rank(), 0.0)};
    for (int s = 0; s < 10000; ++s) {
      const std::size_t v = rng() % p.size();
      TropicalPoint L{v, {}};
      for (std::size_t i = 0; i < p.rank(); ++i) L.x.push_back(pos(rng));
      const auto regions = earthquake_regions(p, g0, quake(p, g0, L).g);
      overlaps += regions.size() > 1;
      misplaced += regions.size() != 1 || regions.front() != reps[v];
    }
  }
  const bool ok = worst <= 1e-9 && locate_failures == 0 && overlaps == 0 && misplaced == 0;
  return {ok, "round trip max err " + fmt(worst) + ", locate failures " + std::to_string(locate_failures) +
                  ", overlapping images " + std::to_string(overlaps) + "/" + std::to_string(misplaced) + " of 4x10^4"};
}

Outcome limit_L_suite() {
  double worst = 0;
  std::size_t non_monotone = 0, count = 0;
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    const PositivePoint g0{p.base(), {0.0, 0.0}};
    for (const auto& v : p.vertices())
      for (std::size_t k = 0; k < 2; ++k) {
        std::vector<double> errs;
        for (double t : {10.0, 100.0, 1000.0}) {
          const auto r = limit_L(p, g0, v.id, k, t);
          double e = 0;
          for (std::size_t i = 0; i < 2; ++i) e = std::max(e, std::abs(r.estimate[i] - r.target[i]));
          errs.push_back(e);
        }
        worst = std::max(worst, errs[2]);
        non_monotone += !(errs[1] <= errs[0] && errs[2] <= errs[1]);
        ++count;
      }
  }
  return {worst <= 1e-2 && non_monotone == 0, std::to_string(count) + " (v,k) pairs, max err at t=1000 " + fmt(worst) +
                                                  ", non-monotone " + std::to_string(non_monotone)};
}

Outcome limit_g_suite() {
  bool ok = true;
  std::string detail;
  for (const char* label : {"A2", "B2", "G2"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    double e10 = 0, e30 = 0;
    for (const auto& v : p.vertices()) {
      e10 = std::max(e10, limit_g(p, {p.base(), {10.0, 10.0}}, v.id).error);
      e30 = std::max(e30, limit_g(p, {p.base(), {30.0, 30.0}}, v.id).error);
    }
    ok = ok && e30 <= 1e-3 && e30 < e10;
    detail += std::string(label) + " M=10 " + fmt(e10) + " M=30 " + fmt(e30) + "; ";
  }
  return {ok, detail};
}

Outcome horocycle_suite() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> gd(-2, 2), pos(0.02, 3), t(0.01, 5), re(-3, 3), im(0.01, 3);
  double conj = 0, compat = 0;
  for (const char* label : {"A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    for (int s = 0; s < 1000; ++s) {
      PositivePoint g{p.base(), {}};
      TropicalPoint L{rng() % p.size(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) {
        g.log_X.push_back(gd(rng));
        L.x.push_back(pos(rng));
      }
      conj = std::max(conj, conjugacy_residual(p, g, L, t(rng)));

      CentralCharge Z{rng() % p.size(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) Z.z.emplace_back(re(rng), im(rng));
      const std::size_t k = rng() % p.rank();
      Z.z[k] = {(rng() % 2 ? 1.0 : -1.0) * pos(rng), 0.0};
      compat = std::max(compat, glue_flow_residual(Z, p, k, re(rng)));
    }
  }
  return {conj <= 1e-10 && compat <= 1e-12,
          "8 types x 1000 samples, conjugacy " + fmt(conj) + ", glue/h_t " + fmt(compat)};
}

Outcome fc_suite() {
  std::size_t checked = 0, failures = 0;
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    for (const auto& v : p.vertices())
      for (const IntMatrix& C : {v.C, opposite_c_matrix(p, v.id)}) {
        failures += !all_nonpositive(v.f_back * C);
        ++checked;
      }
  }
  return {failures == 0, std::to_string(checked) + " products, " + std::to_string(failures) + " with a positive entry"};
}

Outcome enumeration_counts() {
  const std::map<std::string, std::size_t> expected{{"A2", 5}, {"B2", 6}, {"G2", 8}, {"A3", hexagon_triangulations()}};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-1, 1);
  bool ok = true;
  std::string detail;
  for (const auto& [label, count] : expected) {
    const auto p = enumerate(parse_dynkin_type(label));
    const std::size_t cones = fan(p).size();
    std::size_t failures = 0;
    for (int s = 0; s < 10000; ++s) {
      TropicalPoint L{p.base(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) L.x.push_back(d(rng));
      try {
        locate_cone(L, p);
      } catch (const CompletenessError&) {
        ++failures;
      }
    }
    ok = ok && cones == count && failures == 0;
    detail += label + " " + std::to_string(cones) + "/" + std::to_string(count) + " (" + std::to_string(failures) +
              " misses); ";
  }
  return {ok, detail};
}

Outcome figure_data() {
  bool ok = true;
  std::string detail;
  for (const auto& [label, count] : std::vector<std::pair<std::string, std::size_t>>{{"A2", 5}, {"B2", 6}, {"G2", 8}}) {
    const auto p = enumerate(parse_dynkin_type(label));
    for (auto [lo, hi, step] : {std::tuple{-6.0, 6.0, 0.25}, std::tuple{-25.0, 25.0, 1.0}}) {
      RunConfig cfg;
      cfg.range_lo = lo;
      cfg.range_hi = hi;
      cfg.step = step;
      std::set<std::size_t> labels;
      for (const auto& r : plot_grid(p, cfg)) labels.insert(r.cone);
      ok = ok && labels.size() == count;
      detail += label + "[" + fmt(hi) + "]=" + std::to_string(labels.size()) + " ";
    }
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 rank-2 tangent tables", tangent_tables},
      {"2 A2 region formulas", region_formulas},
      {"3 matrix identities", matrix_identities},
      {"4 earthquake bijection", earthquake_bijection},
      {"5 limit L -> infinity", limit_L_suite},
      {"6 limit g -> infinity", limit_g_suite},
      {"7 horocycle conjugacy", horocycle_suite},
      {"8 F*C non-positivity", fc_suite},
      {"9 enumeration counts", enumeration_counts},
      {"F figure grids", figure_data},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << name << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
