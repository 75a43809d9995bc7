#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "cluster_quake/experiments.hpp"

using namespace cluster_quake;

TEST_CASE("plot grid") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  RunConfig cfg;
  cfg.step = 0.5;
  const auto rows = plot_grid(p, cfg);
  CHECK(rows.size() == 25 * 25);
  std::set<std::size_t> labels;
  for (const auto& r : rows) {
    labels.insert(r.cone);
    if (r.x1 == 0 && r.x2 == 0) {
      CHECK(r.logX1 == 0.0);
      CHECK(r.logX2 == 0.0);
    }
  }
  CHECK(labels.size() == 5);

  cfg.range_lo = -25;
  cfg.range_hi = 25;
  cfg.step = 1;
  std::set<std::size_t> wide;
  for (const auto& r : plot_grid(p, cfg)) wide.insert(r.cone);
  CHECK(wide == labels);

  // u-coordinates approach the grid itself as g0 grows
  auto deviation = [&](double g) {
    RunConfig c;
    c.g0 = {g, g};
    double worst = 0;
    for (const auto& r : plot_grid(p, c)) worst = std::max({worst, std::abs(r.u1 - r.x1), std::abs(r.u2 - r.x2)});
    return worst;
  };
  const double near = deviation(1.0), far = deviation(500.0);
  MESSAGE("u-grid deviation at g0=1: " << near << ", at g0=500: " << far);
  CHECK(far < near);
  CHECK(far < near / 4);
}

TEST_CASE("plot grid output is deterministic and well formed") {
  const auto p = enumerate(parse_dynkin_type("G2"));
  RunConfig cfg;
  cfg.step = 1.5;
  std::ostringstream a, b;
  write_grid_csv(a, plot_grid(p, cfg));
  write_grid_csv(b, plot_grid(p, cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("x1,x2,cone,logX1,logX2,u1,u2\n", 0) == 0);
}

TEST_CASE("plot grid preconditions") {
  RunConfig cfg;
  CHECK_THROWS_AS(plot_grid(enumerate(parse_dynkin_type("A3")), cfg), UnsupportedError);
  const auto p = enumerate(parse_dynkin_type("A2"));
  cfg.step = 0;
  CHECK_THROWS_AS(plot_grid(p, cfg), DomainError);
  cfg.step = 1;
  cfg.range_lo = 3;
  cfg.range_hi = -3;
  CHECK_THROWS_AS(plot_grid(p, cfg), DomainError);
}

TEST_CASE("pattern from configuration") {
  RunConfig cfg;
  cfg.type = "B2";
  CHECK(pattern_for(cfg).size() == 6);
  cfg.matrix_json = R"({"entries": [[0,-1],[3,0]]})";
  CHECK(pattern_for(cfg).size() == 8);
  cfg.matrix_json = "[[0,1";
  CHECK_THROWS_AS(pattern_for(cfg), ParseError);
}

TEST_CASE("verification suites") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  const auto report = verify("matrices", p, 1);
  CHECK(report.passed());
  CHECK(report.checks.size() >= 6);
  const auto derivatives = verify("derivatives", p, 1);
  CHECK(derivatives.passed());
  bool table = false;
  for (const auto& c : derivatives.checks) table = table || c.name == "tangent table";
  CHECK(table);
  CHECK(verify("all", enumerate(parse_dynkin_type("B2")), 3).passed());
  CHECK_THROWS_AS(verify("nonsense", p, 1), DomainError);
  const auto j = report.to_json();
  CHECK(j["passed"] == true);
}

TEST_CASE("verification is reproducible") {
  const auto p = enumerate(parse_dynkin_type("G2"));
  std::ostringstream a, b;
  write_report(a, verify("earthquake", p, 42));
  write_report(b, verify("earthquake", p, 42));
  CHECK(a.str() == b.str());
}
