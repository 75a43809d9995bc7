#include <doctest.h>

#include <random>

#include "cluster_quake/horocycle.hpp"
#include "cluster_quake/serialization.hpp"

using namespace cluster_quake;
using namespace std::complex_literals;

TEST_CASE("gluing") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  const CentralCharge Z{p.base(), {-1.0 + 0i, 2.0 + 1i}};
  const auto W = glue(Z, p, 0);
  CHECK(W.chart == p.vertex(p.base()).neighbors[0]);
  CHECK(W.z[0] == -Z.z[0]);
  CHECK(W.z[1] == 1.0 + 1i);
  CHECK(glue(W, p, 0).z == Z.z);
  CHECK(glue(W, p, 0).chart == Z.chart);

  // z_1 < 0 and every eps_i1 <= 0: only z_1 flips (A2 base seed has eps_01 = -1)
  const CentralCharge U{p.base(), {0.5 + 2i, -3.0 + 0i}};
  const auto V = glue(U, p, 1);
  CHECK(V.z[0] == U.z[0]);
  CHECK(V.z[1] == 3.0 + 0i);
  // z_1 > 0 picks up the arrow instead
  CHECK(glue({p.base(), {0.5 + 2i, 3.0 + 0i}}, p, 1).z[0] == 3.5 + 2i);

  CHECK_THROWS_AS(glue({p.base(), {-1.0 + 0.5i, 2.0 + 1i}}, p, 0), GluingDomainError);
  CHECK_THROWS_AS(glue({p.base(), {0.0 + 0i, 2.0 + 1i}}, p, 0), GluingDomainError);
  CHECK_THROWS_AS(glue(Z, p, 2), IndexError);
}

TEST_CASE("horocycle flow") {
  const CentralCharge Z{0, {1.0 + 2i, -3.0 + 0i}};
  CHECK(horocycle_flow(Z, 0.0).z == Z.z);
  const auto W = horocycle_flow(Z, 1.5);
  CHECK(W.z[0] == 4.0 + 2i);
  CHECK(W.z[1] == Z.z[1]);
  CHECK(horocycle_flow(W, -1.5).z == Z.z);
}

TEST_CASE("gluing commutes with the flow") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> re(-3, 3), im(0.01, 3), t(-4, 4);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    for (int s = 0; s < 200; ++s) {
      CentralCharge Z{rng() % p.size(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) Z.z.emplace_back(re(rng), im(rng));
      const std::size_t k = rng() % p.rank();
      Z.z[k] = {re(rng) + (rng() % 2 ? 3.5 : -3.5), 0.0};
      CHECK(glue_flow_residual(Z, p, k, t(rng)) <= 1e-12);
      CHECK(max_abs_difference(glue(glue(Z, p, k), p, k), Z) <= 1e-12);
    }
  }
}

TEST_CASE("lift") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  const PositivePoint g{p.base(), {0.0, 0.0}};
  const auto Z = lift(p, g, {p.base(), {0.3, 0.7}});
  CHECK(Z.chart == p.base());
  CHECK(Z.z[0] == 0.3i);
  CHECK(Z.z[1] == 0.7i);
  CHECK_NOTHROW(Z.validate());

  const TropicalPoint L{p.base(), {-0.5, -0.2}};
  const auto W = lift(p, g, L);
  CHECK(W.chart == locate_cone(L, p).vertex);
  for (const auto& z : W.z) CHECK(std::abs(z) > 0);
  CHECK_NOTHROW(W.validate());

  CHECK_THROWS_AS(lift(p, g, {p.base(), {-1.0, 0.0}}), BoundaryError);
  CHECK_THROWS_AS((CentralCharge{0, {1.0 - 1i}}.validate()), DomainError);
  CHECK_THROWS_AS((CentralCharge{0, {0.0 + 0i}}.validate()), DomainError);
}

TEST_CASE("earthquake flow is conjugate to the horocycle flow") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> gd(-2, 2), pos(0.05, 3), t(0.01, 5);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(label);
    const auto p = enumerate(parse_dynkin_type(label));
    for (int s = 0; s < 200; ++s) {
      PositivePoint g{p.base(), {}};
      TropicalPoint L{rng() % p.size(), {}};
      for (std::size_t i = 0; i < p.rank(); ++i) {
        g.log_X.push_back(gd(rng));
        L.x.push_back(pos(rng));
      }
      CHECK(conjugacy_residual(p, g, L, t(rng)) <= 1e-10);
      // imaginary parts do not move under the flow
      const auto Z = lift(p, g, L);
      const auto W = horocycle_flow(Z, 2.0);
      for (std::size_t i = 0; i < p.rank(); ++i) CHECK(W.z[i].imag() == Z.z[i].imag());
    }
  }
  const auto p = enumerate(parse_dynkin_type("A2"));
  CHECK(conjugacy_residual(p, {0, {0.1, 0.2}}, {0, {0.5, 1.0}}, 1e-9) <= 1e-12);
}

TEST_CASE("JSON form") {
  const Json j = to_json(CentralCharge{2, {1.0 + 2i}});
  CHECK(j.dump() == R"({"chart":2,"z":[[1.0,2.0]]})");
}
