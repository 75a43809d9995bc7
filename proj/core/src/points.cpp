#include "cluster_quake/points.hpp"

#include <algorithm>

namespace cluster_quake {

namespace {

double softplus(double a) { return a > 0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a)); }
double sigmoid(double a) {
  if (a >= 0) return 1.0 / (1.0 + std::exp(-a));
  const double e = std::exp(a);
  return e / (1.0 + e);
}

}  // namespace

PositivePoint PositivePoint::from_values(std::size_t chart, std::span<const double> X) {
  PositivePoint g{chart, {}};
  for (double v : X) {
    if (!(v > 0) || !std::isfinite(v)) throw DomainError("positive point needs finite positive coordinates");
    g.log_X.push_back(std::log(v));
  }
  return g;
}

std::vector<double> PositivePoint::values() const {
  std::vector<double> out;
  for (double l : log_X) out.push_back(std::exp(l));
  return out;
}

std::vector<double> log_positive_step(std::span<const double> log_X, const ExchangeMatrix& eps, std::size_t k) {
  std::vector<double> out(log_X.begin(), log_X.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == k) {
      out[i] = -log_X[k];
    } else if (const Int e = eps(i, k); e != 0) {
      out[i] = log_X[i] - static_cast<double>(e) * softplus(-sign_of(e) * log_X[k]);
    }
  }
  return out;
}

std::vector<double> log_tangent_step(std::span<const double> log_X, std::span<const double> delta,
                                     const ExchangeMatrix& eps, std::size_t k) {
  std::vector<double> out(delta.begin(), delta.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == k) {
      out[i] = -delta[k];
    } else if (const Int e = eps(i, k); e != 0) {
      out[i] = delta[i] + static_cast<double>(std::abs(e)) * sigmoid(-sign_of(e) * log_X[k]) * delta[k];
    }
  }
  return out;
}

PositivePoint positive_transport(const PositivePoint& g, const ExchangePattern& p, std::size_t target) {
  if (g.log_X.size() != p.rank()) throw DomainError("positive point has wrong dimension");
  PositivePoint out{target, g.log_X};
  for (const WalkStep& s : p.walk(g.chart, target))
    out.log_X = log_positive_step(out.log_X, p.vertex(s.from).eps, s.direction);
  return out;
}

std::vector<std::vector<double>> log_coordinates_in_all_charts(const PositivePoint& g, const ExchangePattern& p) {
  std::vector<std::vector<double>> out(p.size());
  out[p.base()] = positive_transport(g, p, p.base()).log_X;
  // BFS order: every parent precedes its children
  for (const auto& v : p.vertices()) {
    if (!v.parent) continue;
    out[v.id] = log_positive_step(out[*v.parent], p.vertex(*v.parent).eps, v.path.back());
  }
  return out;
}

bool ConeLocation::on_boundary() const {
  return std::any_of(boundary.begin(), boundary.end(), [](bool b) { return b; });
}

ConeLocation locate_cone(const TropicalPoint& L, const ExchangePattern& p, double tol) {
  const std::size_t n = p.rank();
  const auto x0 = tropical_transport(L, p, p.base()).x;
  for (const auto& v : p.vertices()) {
    std::vector<double> y(n, 0.0);
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      for (std::size_t j = 0; j < n; ++j) y[i] += static_cast<double>(v.C_back_inverse(i, j)) * x0[j];
      inside = y[i] >= -tol;
    }
    if (!inside) continue;
    ConeLocation loc;
    loc.vertex = v.id;
    loc.coords = tropical_transport(TropicalPoint{p.base(), x0}, p, v.id).x;
    for (double c : loc.coords) loc.boundary.push_back(std::abs(c) <= tol);
    return loc;
  }
  throw CompletenessError("tropical point lies in no cone of the fan");
}

std::vector<double> separation_eval_log(const ExchangePattern& p, std::size_t v, std::span<const double> log_X0) {
  const PatternVertex& pv = p.vertex(v);
  const std::size_t n = p.rank();
  if (log_X0.size() != n) throw DomainError("point has wrong dimension");
  std::vector<double> logF(n);
  for (std::size_t j = 0; j < n; ++j) logF[j] = pv.F[j].log_evaluate(log_X0);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i] += static_cast<double>(pv.C(i, j)) * log_X0[j] + static_cast<double>(pv.eps(i, j)) * logF[j];
  return out;
}

}  // namespace cluster_quake
