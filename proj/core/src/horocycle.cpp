#include "cluster_quake/horocycle.hpp"

#include <algorithm>
#include <cmath>

namespace cluster_quake {

void CentralCharge::validate() const {
  for (const auto& v : z) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("central charge must be finite");
    if (v == std::complex<double>(0.0, 0.0)) throw DomainError("central charge coordinate is zero");
    if (v.imag() < 0.0) throw DomainError("central charge coordinate below the real axis");
  }
}

CentralCharge glue(const CentralCharge& Z, const ExchangePattern& p, std::size_t k) {
  if (Z.z.size() != p.rank()) throw DomainError("central charge has wrong dimension");
  if (k >= Z.z.size()) throw IndexError("direction out of range");
  const std::complex<double> zk = Z.z[k];
  if (zk.imag() != 0.0 || zk.real() == 0.0) throw GluingDomainError("gluing needs z_k real and nonzero");
  const PatternVertex& v = p.vertex(Z.chart);
  const int s = zk.real() > 0 ? 1 : -1;
  CentralCharge out{v.neighbors[k], Z.z};
  for (std::size_t i = 0; i < out.z.size(); ++i) {
    if (i == k) {
      out.z[i] = -zk;
    } else {
      const Int coef = positive_part(-s * v.eps(i, k));
      out.z[i] += static_cast<double>(coef) * zk;
    }
  }
  return out;
}

CentralCharge horocycle_flow(const CentralCharge& Z, double t) {
  CentralCharge out = Z;
  for (auto& v : out.z) v = {v.real() + t * v.imag(), v.imag()};
  return out;
}

CentralCharge lift(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L, double tol) {
  const ConeLocation loc = locate_cone(L, p, tol);
  if (loc.on_boundary()) throw BoundaryError("tropical point lies on a wall of the fan");
  const auto logs = positive_transport(g, p, loc.vertex).log_X;
  CentralCharge Z{loc.vertex, {}};
  for (std::size_t i = 0; i < logs.size(); ++i) Z.z.emplace_back(logs[i], loc.coords[i]);
  return Z;
}

double max_abs_difference(const CentralCharge& a, const CentralCharge& b) {
  if (a.chart != b.chart || a.z.size() != b.z.size()) throw DomainError("central charges in different charts");
  double m = 0.0;
  for (std::size_t i = 0; i < a.z.size(); ++i) m = std::max(m, std::abs(a.z[i] - b.z[i]));
  return m;
}

double conjugacy_residual(const ExchangePattern& p, const PositivePoint& g, const TropicalPoint& L, double t) {
  if (!(t > 0)) throw DomainError("flow time must be positive");
  const PositivePoint moved = quake(p, g, scale(L, t)).g;
  return max_abs_difference(lift(p, moved, L), horocycle_flow(lift(p, g, L), t));
}

double glue_flow_residual(const CentralCharge& Z, const ExchangePattern& p, std::size_t k, double t) {
  return max_abs_difference(glue(horocycle_flow(Z, t), p, k), horocycle_flow(glue(Z, p, k), t));
}

}  // namespace cluster_quake
