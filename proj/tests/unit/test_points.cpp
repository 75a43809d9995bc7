#include <doctest.h>

#include <random>

#include "cluster_quake/points.hpp"
#include "cluster_quake/serialization.hpp"

using namespace cluster_quake;

namespace {

std::size_t vertex_by_path(const ExchangePattern& p, const std::vector<std::size_t>& path) {
  std::size_t v = p.base();
  for (std::size_t k : path) v = p.vertex(v).neighbors[k];
  return v;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 40);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("tropical transport on A2") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  const std::size_t v1 = vertex_by_path(p, {0});
  const TropicalPoint L{p.base(), {1.0, 0.0}};
  CHECK(tropical_transport(L, p, p.base()).x == L.x);
  CHECK(tropical_transport(L, p, v1).x == std::vector<double>{-1.0, 1.0});
  CHECK(tropical_transport(TropicalPoint{p.base(), {-1.0, 0.0}}, p, v1).x == std::vector<double>{1.0, 0.0});
}

TEST_CASE("positive transport on A2 at g0 = (1,1)") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  const PositiveCoords<Rational> g0{p.base(), {Rational(1), Rational(1)}};
  const std::vector<std::vector<Rational>> expected{
      {1, 1}, {1, Rational(1, 2)}, {Rational(1, 3), 2}, {3, Rational(1, 2)}, {1, 2}};
  std::vector<std::size_t> path;
  for (std::size_t step = 0; step < expected.size(); ++step) {
    CHECK(positive_transport(g0, p, vertex_by_path(p, path)).X == expected[step]);
    path.push_back(step % 2);
  }
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-20, 20);
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto p = enumerate(parse_dynkin_type(label));
    for (int s = 0; s < 200; ++s) {
      const std::size_t v = rng() % p.size(), w = rng() % p.size();
      TropicalPointT<Rational> L{v, {}};
      PositiveCoords<Rational> g{v, {}};
      for (std::size_t i = 0; i < p.rank(); ++i) {
        L.x.push_back(Rational(small(rng), 1 + (rng() % 7)));
        g.X.push_back(random_rational(rng));
      }
      CHECK(tropical_transport(tropical_transport(L, p, w), p, v).x == L.x);
      const auto there = positive_transport(g, p, w);
      for (const auto& x : there.X) CHECK(x > 0);
      CHECK(positive_transport(there, p, v).X == g.X);
    }
  }
}

TEST_CASE("log-space transport matches plain transport") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-2, 2);
  const auto p = enumerate(parse_dynkin_type("B3"));
  for (int s = 0; s < 100; ++s) {
    const std::size_t w = rng() % p.size();
    PositiveCoords<double> g{p.base(), {}};
    for (std::size_t i = 0; i < 3; ++i) g.X.push_back(std::exp(d(rng)));
    const auto plain = positive_transport(g, p, w).X;
    const auto logs = positive_transport(PositivePoint::from_values(p.base(), g.X), p, w).log_X;
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::log(plain[i]) == doctest::Approx(logs[i]).epsilon(1e-12));
  }
  const PositivePoint huge{p.base(), {500.0, -700.0, 300.0}};
  for (const auto& v : log_coordinates_in_all_charts(huge, p))
    for (double x : v) CHECK(std::isfinite(x));
}

TEST_CASE("separation formula equals path transport exactly") {
  std::mt19937_64 rng(17);
  for (const char* label : {"A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4"}) {
    CAPTURE(label);
    const auto p = enumerate(parse_dynkin_type(label));
    const int samples = p.size() > 500 ? 1 : 5;
    for (int s = 0; s < samples; ++s) {
      std::vector<Rational> X0;
      for (std::size_t i = 0; i < p.rank(); ++i) X0.push_back(random_rational(rng));
      for (const auto& v : p.vertices()) {
        const auto direct = separation_eval<Rational>(p, v.id, X0);
        CHECK(direct == positive_transport(PositiveCoords<Rational>{p.base(), X0}, p, v.id).X);
      }
    }
  }
  const auto p = enumerate(parse_dynkin_type("A2"));
  const std::vector<double> ones{1.0, 1.0};
  CHECK(separation_eval<double>(p, p.base(), ones) == ones);
  const std::vector<double> logs{0.3, -0.2};
  const auto l = separation_eval_log(p, 3, logs);
  const std::vector<double> vals{std::exp(0.3), std::exp(-0.2)};
  const auto v = separation_eval<double>(p, 3, vals);
  for (std::size_t i = 0; i < 2; ++i) CHECK(std::log(v[i]) == doctest::Approx(l[i]));
  const std::vector<double> bad{1.0, -1.0};
  CHECK_THROWS_AS(separation_eval<double>(p, 1, bad), DomainError);
}

TEST_CASE("cone location") {
  const auto p = enumerate(parse_dynkin_type("A2"));
  CHECK(locate_cone({p.base(), {1.0, 2.0}}, p).vertex == p.base());
  const auto loc = locate_cone({p.base(), {-1.0, 0.0}}, p);
  const auto& gens = p.vertex(loc.vertex).C_back;
  CHECK(((gens.col(0) == std::vector<Int>{-1, 0}) || (gens.col(1) == std::vector<Int>{-1, 0})));
  CHECK(loc.on_boundary());
  CHECK(locate_cone({p.base(), {0.0, 0.0}}, p).vertex == p.base());

  for (const char* label : {"A2", "B2", "G2", "A1xA1"}) {
    const auto q = enumerate(parse_dynkin_type(label));
    for (double a = -6; a <= 6; a += 0.25)
      for (double b = -6; b <= 6; b += 0.25) {
        const auto l = locate_cone({q.base(), {a, b}}, q);
        for (double c : l.coords) CHECK(c >= -1e-9);
      }
  }
  CHECK_THROWS_AS(tropical_transport(TropicalPoint{99, {0.0, 0.0}}, p, 0), LookupError);
}

TEST_CASE("scaling") {
  const auto p = enumerate(parse_dynkin_type("G2"));
  const TropicalPoint L{p.base(), {0.7, -1.3}};
  CHECK(scale(L, 1.0).x == L.x);
  CHECK_THROWS_AS(scale(L, 0.0), DomainError);
  CHECK_THROWS_AS(scale(L, -2.0), DomainError);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> d(-5, 5), t(0.1, 10);
  for (int s = 0; s < 1000; ++s) {
    const TropicalPoint M{p.base(), {d(rng), d(rng)}};
    const double f = t(rng);
    const std::size_t w = rng() % p.size();
    const auto a = tropical_transport(scale(M, f), p, w).x;
    const auto b = scale(tropical_transport(M, p, w), f).x;
    for (std::size_t i = 0; i < 2; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
  const TropicalPointT<Rational> R{0, {Rational(3, 4), Rational(-1, 5)}};
  CHECK(scale(scale(R, Rational(2)), Rational(1, 2)).x == R.x);
}

TEST_CASE("transport is linear inside a cone with matrix given by the generators") {
  const auto p = enumerate(parse_dynkin_type("B3"));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(0, 2);
  for (const auto& v : p.vertices()) {
    const std::vector<double> y{d(rng), d(rng), d(rng)};
    const auto x0 = to_real(v.C_back).apply(y);
    const auto back = tropical_transport(TropicalPoint{p.base(), x0}, p, v.id).x;
    for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(y[i]).epsilon(1e-12));
  }
}

TEST_CASE("JSON form") {
  const Json j = to_json(TropicalPoint{0, {-1.0, 0.0}});
  CHECK(j.dump() == R"({"chart":0,"coords":[-1.0,0.0]})");
  CHECK_THROWS_AS(PositivePoint::from_values(0, std::vector<double>{1.0, 0.0}), DomainError);
}
