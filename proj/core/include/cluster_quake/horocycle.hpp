#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cluster_quake/earthquake.hpp"

namespace cluster_quake {

// Central charge coordinates z_i in the closed upper half-plane, pinned to a chart.
struct CentralCharge {
  std::size_t chart = 0;
  std::vector<std::complex<double>> z;

  // Throws DomainError unless every z_i is nonzero with Im z_i >= 0.
  void validate() const;
};

// Crosses the wall Im z_k = 0 into the chart mu_k(chart).
CentralCharge glue(const CentralCharge& Z, const ExchangePattern& p, std::size_t k);

// z -> Re z + t Im z + i Im z in every coordinate.
CentralCharge horocycle_flow(const CentralCharge& Z, double t);

// z_i = log X_i^(v)(g) + i x_i^(v)(L) in the cone v containing L in its interior.
CentralCharge lift(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L, double tol = 1e-9);

// max |lift(E(g, tL), L) - h_t(lift(g, L))|.
double conjugacy_residual(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L, double t);

// max |glue(h_t(Z)) - h_t(glue(Z))| for a charge with z_k real.
double glue_flow_residual(const CentralCharge& Z, const ExchangePattern& p, std::size_t k, double t);

double max_abs_difference(const CentralCharge& a, const CentralCharge& b);

}  // namespace cluster_quake
