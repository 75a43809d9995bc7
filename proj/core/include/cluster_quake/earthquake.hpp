#pragma once

#include <cstddef>
#include <vector>

#include "cluster_quake/pattern.hpp"
#include "cluster_quake/points.hpp"

namespace cluster_quake {

struct EarthquakeResult {
  PositivePoint g;
  std::size_t cone_vertex = 0;
};

// Cluster earthquake E(g0, L); the result is expressed in the chart of g0.
EarthquakeResult quake(const ExchangePattern& p, const PositivePoint& g0, const TropicalPoint& L,
                       double tol = 1e-9);

// Earthquake evaluated through the chart of vertex v without locating L first.
PositivePoint pre_earthquake(const ExchangePattern& p, const PositivePoint& g0, const TropicalPoint& L, std::size_t v);

// Cone representatives v for which x^(v)(log X(g) - log X(g0)) is strictly positive.
std::vector<std::size_t> earthquake_regions(const ExchangePattern& p, const PositivePoint& g0,
                                            const PositivePoint& g, double tol = 1e-9);

// Tropical point L (in the base chart) with quake(g0, L) = g.
TropicalPoint inverse_quake(const ExchangePattern& p, const PositivePoint& g0, const PositivePoint& g,
                            double tol = 1e-9);

enum class DerivativeMethod { analytic, finite_difference };

struct TangentVector {
  PositivePoint base;
  std::size_t chart = 0;
  std::vector<double> delta;  // components along d/d log X_i^(chart)
};

// d/dt at t = 0+ of E(g, tL), expressed in the chart of g.
TangentVector dquake(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L,
                     DerivativeMethod method = DerivativeMethod::analytic, double step = 1e-4);

// log(X^(chart)(E(g, L)) / X^(chart)(g)).
std::vector<double> u_coords(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L,
                             std::size_t chart);

// Tropical point with x^(v) = e_k.
TropicalPoint cone_generator(const ExchangePattern& p, std::size_t v, std::size_t k);

struct LimitLResult {
  std::vector<double> estimate;
  std::vector<double> target;
  double error = 0.0;
};

// log X^(v0)(E(g0, t L_k^(v))) / t against column k of C^{-s}_{v->v0}.
LimitLResult limit_L(const ExchangePattern& p, const PositivePoint& g0, std::size_t v, std::size_t k, double t);

struct LimitGResult {
  RealMatrix u;
  IntMatrix target;
  double error = 0.0;
};

// Columns u(g, L_k^(v)) in the base chart against C^s_{v->v0}.
LimitGResult limit_g(const ExchangePattern& p, const PositivePoint& g, std::size_t v);

// Max deviation between the J-coordinates of E(g0, L) and the earthquake of the
// projected data in the sub-pattern spanned by the directions J at v0.
double cluster_reduce(const ExchangePattern& p, std::size_t v0, const std::vector<std::size_t>& J,
                      const PositivePoint& g0, const TropicalPoint& L, double tol = 1e-9);

}  // namespace cluster_quake
