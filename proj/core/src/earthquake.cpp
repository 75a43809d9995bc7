#include "cluster_quake/earthquake.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace cluster_quake {

EarthquakeResult quake(const ExchangePattern& p, const PositivePoint& g0, const TropicalPoint& L, double tol) {
  const ConeLocation loc = locate_cone(L, p, tol);
  PositivePoint g = positive_transport(g0, p, loc.vertex);
  for (std::size_t i = 0; i < g.log_X.size(); ++i) g.log_X[i] += loc.coords[i];
  return {positive_transport(g, p, g0.chart), loc.vertex};
}

PositivePoint pre_earthquake(const ExchangePattern& p, const PositivePoint& g0, const TropicalPoint& L, std::size_t v) {
  const auto x = tropical_transport(L, p, v).x;
  PositivePoint g = positive_transport(g0, p, v);
  for (std::size_t i = 0; i < x.size(); ++i) g.log_X[i] += x[i];
  return positive_transport(g, p, g0.chart);
}

std::vector<std::size_t> earthquake_regions(const ExchangePattern& p, const PositivePoint& g0,
                                            const PositivePoint& g, double tol) {
  const auto a = log_coordinates_in_all_charts(g, p);
  const auto b = log_coordinates_in_all_charts(g0, p);
  const auto reps = cone_representatives(p);
  std::vector<std::size_t> out;
  for (const auto& v : p.vertices()) {
    if (reps[v.id] != v.id) continue;
    bool inside = true;
    for (std::size_t i = 0; i < p.rank() && inside; ++i) inside = a[v.id][i] - b[v.id][i] > tol;
    if (inside) out.push_back(v.id);
  }
  return out;
}

TropicalPoint inverse_quake(const ExchangePattern& p, const PositivePoint& g0, const PositivePoint& g, double tol) {
  const auto a = log_coordinates_in_all_charts(g, p);
  const auto b = log_coordinates_in_all_charts(g0, p);
  for (const auto& v : p.vertices()) {
    std::vector<double> x(p.rank());
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) {
      x[i] = a[v.id][i] - b[v.id][i];
      ok = x[i] >= -tol;
    }
    if (ok) return tropical_transport(TropicalPoint{v.id, x}, p, p.base());
  }
  throw HomeomorphismError("no chart exhibits g as an earthquake of g0");
}

TangentVector dquake(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L,
                     DerivativeMethod method, double step) {
  TangentVector tv{g, g.chart, {}};
  if (method == DerivativeMethod::finite_difference) {
    auto quotient = [&](double h) {
      const auto moved = quake(p, g, scale(L, h)).g.log_X;
      std::vector<double> d(moved.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = (moved[i] - g.log_X[i]) / h;
      return d;
    };
    const auto coarse = quotient(step);
    const auto fine = quotient(step / 2);
    tv.delta.resize(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) tv.delta[i] = 2 * fine[i] - coarse[i];
    return tv;
  }

  const ConeLocation loc = locate_cone(L, p);
  PositivePoint here = positive_transport(g, p, loc.vertex);
  std::vector<double> delta = loc.coords;
  for (const WalkStep& s : p.walk(loc.vertex, g.chart)) {
    const ExchangeMatrix& eps = p.vertex(s.from).eps;
    delta = log_tangent_step(here.log_X, delta, eps, s.direction);
    here.log_X = log_positive_step(here.log_X, eps, s.direction);
  }
  tv.delta = std::move(delta);
  return tv;
}

std::vector<double> u_coords(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L,
                             std::size_t chart) {
  const auto after = positive_transport(quake(p, g, L).g, p, chart).log_X;
  const auto before = positive_transport(g, p, chart).log_X;
  std::vector<double> u(after.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = after[i] - before[i];
  return u;
}

TropicalPoint cone_generator(const ExchangePattern& p, std::size_t v, std::size_t k) {
  if (k >= p.rank()) throw IndexError("direction out of range");
  TropicalPoint L{p.vertex(v).id, std::vector<double>(p.rank(), 0.0)};
  L.x[k] = 1.0;
  return L;
}

LimitLResult limit_L(const ExchangePattern& p, const PositivePoint& g0, std::size_t v, std::size_t k, double t) {
  if (!(t > 0)) throw DomainError("limit parameter must be positive");
  const auto moved = quake(p, g0, scale(cone_generator(p, v, k), t)).g;
  const auto base = positive_transport(moved, p, p.base()).log_X;
  const IntMatrix target = opposite_c_matrix_back(p, v);
  LimitLResult r;
  for (std::size_t i = 0; i < base.size(); ++i) {
    r.estimate.push_back(base[i] / t);
    r.target.push_back(static_cast<double>(target(i, k)));
    r.error = std::max(r.error, std::abs(r.estimate.back() - r.target.back()));
  }
  return r;
}

LimitGResult limit_g(const ExchangePattern& p, const PositivePoint& g, std::size_t v) {
  const std::size_t n = p.rank();
  LimitGResult r{RealMatrix(n, n), p.vertex(v).C_back, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const auto u = u_coords(p, g, cone_generator(p, v, k), p.base());
    r.u.set_col(k, u);
  }
  r.error = max_abs_difference(r.u, to_real(r.target));
  return r;
}

double cluster_reduce(const ExchangePattern& p, std::size_t v0, const std::vector<std::size_t>& J,
                      const PositivePoint& g0, const TropicalPoint& L, double tol) {
  if (J.empty()) throw PreconditionError("cluster reduction needs a non-empty index set");
  std::set<std::size_t> js(J.begin(), J.end());
  if (js.size() != J.size() || *js.rbegin() >= p.rank()) throw PreconditionError("invalid index set");

  // vertices reachable from v0 by mutations in J
  std::vector<bool> seen(p.size(), false);
  std::deque<std::size_t> queue{v0};
  seen[p.vertex(v0).id] = true;
  bool in_star = false;
  while (!queue.empty() && !in_star) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const auto x = tropical_transport(L, p, v).x;
    in_star = std::all_of(x.begin(), x.end(), [&](double c) { return c >= -tol; });
    for (std::size_t k : J) {
      const std::size_t w = p.vertex(v).neighbors[k];
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  if (!in_star) throw PreconditionError("tropical point lies outside the star of the face");

  EnumerateOptions opts;
  opts.include_permutations = false;
  const ExchangePattern sub = enumerate(p.vertex(v0).eps.submatrix(J), opts);

  auto project = [&](const std::vector<double>& full) {
    std::vector<double> out;
    for (std::size_t j : J) out.push_back(full[j]);
    return out;
  };
  const auto full = positive_transport(quake(p, g0, L, tol).g, p, v0).log_X;
  const PositivePoint g0_sub{sub.base(), project(positive_transport(g0, p, v0).log_X)};
  const TropicalPoint L_sub{sub.base(), project(tropical_transport(L, p, v0).x)};
  const auto reduced = quake(sub, g0_sub, L_sub, tol).g.log_X;

  const auto expected = project(full);
  double residual = 0.0;
  for (std::size_t i = 0; i < reduced.size(); ++i) residual = std::max(residual, std::abs(expected[i] - reduced[i]));
  return residual;
}

}  // namespace cluster_quake
