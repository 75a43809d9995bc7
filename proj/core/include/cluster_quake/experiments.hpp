#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cluster_quake/horocycle.hpp"
#include "cluster_quake/serialization.hpp"

namespace cluster_quake {

struct RunConfig {
  std::string type = "A2";
  std::string matrix_json;  // overrides type when non-empty
  std::size_t chart = 0;
  std::vector<double> g0{1.0, 1.0};
  double range_lo = -6.0;
  double range_hi = 6.0;
  double step = 0.5;
  std::string format = "csv";
  std::uint64_t seed = 1;
  double tol = 1e-9;

  void validate() const;
};

ExchangePattern pattern_for(const RunConfig& cfg, std::size_t cap = 50000);

struct GridRow {
  double x1 = 0, x2 = 0;
  std::size_t cone = 0;
  double logX1 = 0, logX2 = 0;
  double u1 = 0, u2 = 0;
};

// Earthquake images of the grid points in the base chart; rank 2 only.
std::vector<GridRow> plot_grid(const ExchangePattern& p, const RunConfig& cfg);

void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows);

// Pairs (l, xi) of the rank-2 tangent tables at log X(g) = (0, 0); empty for other types.
std::vector<std::pair<std::vector<double>, std::vector<double>>> reference_tangent_table(const std::string& label);

struct VerifyCheck {
  std::string name;
  bool passed = true;
  std::size_t count = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::string type;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  Json to_json() const;
};

// suite is one of matrices, fan, earthquake, derivatives, limits, horocycle, all.
VerifyReport verify(const std::string& suite, const ExchangePattern& p, std::uint64_t seed);

void write_report(std::ostream& os, const VerifyReport& report);

}  // namespace cluster_quake
