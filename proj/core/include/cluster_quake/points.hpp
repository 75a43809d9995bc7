#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "cluster_quake/pattern.hpp"
#include "cluster_quake/rational.hpp"

namespace cluster_quake {

// Point of the tropical X-manifold given by its coordinates in one chart.
template <class S>
struct TropicalPointT {
  std::size_t chart = 0;
  std::vector<S> x;
};
using TropicalPoint = TropicalPointT<double>;

// Point of the positive X-manifold given by its coordinates in one chart.
template <class S>
struct PositiveCoords {
  std::size_t chart = 0;
  std::vector<S> X;
};

// Positive point stored by logarithms of its coordinates, so that very large or
// very small values survive transport.
struct PositivePoint {
  std::size_t chart = 0;
  std::vector<double> log_X;

  static PositivePoint from_values(std::size_t chart, std::span<const double> X);
  std::vector<double> values() const;
};

template <class S>
std::vector<S> tropical_step(std::span<const S> x, const ExchangeMatrix& eps, std::size_t k) {
  std::vector<S> y(x.begin(), x.end());
  const int sk = x[k] > S(0) ? 1 : (x[k] < S(0) ? -1 : 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == k) {
      y[i] = -x[k];
    } else {
      const Int coef = positive_part(sk * eps(i, k));
      if (coef != 0) y[i] = x[i] + S(coef) * x[k];
    }
  }
  return y;
}

template <class S>
S integer_power(const S& base, Int e) {
  S result(1);
  const Int m = e < 0 ? -e : e;
  for (Int i = 0; i < m; ++i) result *= base;
  return e < 0 ? S(1) / result : result;
}

template <class S>
std::vector<S> positive_step(std::span<const S> X, const ExchangeMatrix& eps, std::size_t k) {
  std::vector<S> Y(X.begin(), X.end());
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (i == k) {
      Y[i] = S(1) / X[k];
    } else if (const Int e = eps(i, k); e != 0) {
      const S factor = S(1) + (e > 0 ? S(1) / X[k] : X[k]);
      Y[i] = X[i] * integer_power(factor, -e);
    }
  }
  return Y;
}

std::vector<double> log_positive_step(std::span<const double> log_X, const ExchangeMatrix& eps, std::size_t k);

// Jacobian of log_positive_step at log_X applied to a tangent vector in log coordinates.
std::vector<double> log_tangent_step(std::span<const double> log_X, std::span<const double> delta,
                                     const ExchangeMatrix& eps, std::size_t k);

template <class S>
TropicalPointT<S> tropical_transport(const TropicalPointT<S>& L, const ExchangePattern& p, std::size_t target) {
  if (L.x.size() != p.rank()) throw DomainError("tropical point has wrong dimension");
  TropicalPointT<S> out{target, L.x};
  for (const WalkStep& s : p.walk(L.chart, target)) out.x = tropical_step<S>(out.x, p.vertex(s.from).eps, s.direction);
  return out;
}

template <class S>
PositiveCoords<S> positive_transport(const PositiveCoords<S>& g, const ExchangePattern& p, std::size_t target) {
  if (g.X.size() != p.rank()) throw DomainError("positive point has wrong dimension");
  for (const S& v : g.X)
    if (!(v > S(0))) throw DomainError("positive point with non-positive coordinate");
  PositiveCoords<S> out{target, g.X};
  for (const WalkStep& s : p.walk(g.chart, target)) out.X = positive_step<S>(out.X, p.vertex(s.from).eps, s.direction);
  return out;
}

PositivePoint positive_transport(const PositivePoint& g, const ExchangePattern& p, std::size_t target);

// log X^(v)(g) for every vertex v, indexed by vertex id.
std::vector<std::vector<double>> log_coordinates_in_all_charts(const PositivePoint& g, const ExchangePattern& p);

struct ConeLocation {
  std::size_t vertex = 0;
  std::vector<double> coords;  // x^(vertex)(L)
  std::vector<bool> boundary;  // coords[i] within tolerance of 0
  bool on_boundary() const;
};

// Smallest vertex id whose cone contains L up to tol; throws CompletenessError otherwise.
ConeLocation locate_cone(const TropicalPoint& L, const ExchangePattern& p, double tol = 1e-9);

template <class S>
TropicalPointT<S> scale(const TropicalPointT<S>& L, const S& t) {
  if (!(t > S(0))) throw DomainError("scaling factor must be positive");
  TropicalPointT<S> out = L;
  for (auto& v : out.x) v *= t;
  return out;
}

// Coordinates of chart v from base-chart coordinates via C-matrix and F-polynomials.
template <class S>
std::vector<S> separation_eval(const ExchangePattern& p, std::size_t v, std::span<const S> X0) {
  const PatternVertex& pv = p.vertex(v);
  const std::size_t n = p.rank();
  if (X0.size() != n) throw DomainError("point has wrong dimension");
  for (const S& x : X0)
    if (!(x > S(0))) throw DomainError("separation formula needs positive coordinates");
  std::vector<S> Fv(n);
  for (std::size_t j = 0; j < n; ++j) Fv[j] = pv.F[j].evaluate<S>(X0);
  std::vector<S> out(n, S(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (pv.C(i, j) != 0) out[i] *= integer_power(X0[j], pv.C(i, j));
      if (pv.eps(i, j) != 0) out[i] *= integer_power(Fv[j], pv.eps(i, j));
    }
  return out;
}

std::vector<double> separation_eval_log(const ExchangePattern& p, std::size_t v, std::span<const double> log_X0);

}  // namespace cluster_quake
