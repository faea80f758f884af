#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "dirdepth/distance.hpp"
#include "dirdepth/rng.hpp"
#include "dirdepth/rotation.hpp"
#include "dirdepth/unit_vector.hpp"

using namespace dirdepth;

namespace {

UnitVector random_point(Rng& rng, int q) {
  std::vector<double> v(static_cast<std::size_t>(q));
  for (double& c : v) c = rng.gaussian();
  return normalize(v);
}

}  // namespace

TEST_CASE("normalize scales onto the sphere") {
  const UnitVector u = normalize(std::vector<double>{3.0, 4.0});
  CHECK(u[0] == Catch::Approx(0.6));
  CHECK(u[1] == Catch::Approx(0.8));

  const UnitVector e1 = normalize(std::vector<double>{1.0, 0.0, 0.0});
  CHECK(e1[0] == 1.0);
  CHECK(e1[1] == 0.0);
  CHECK(e1[2] == 0.0);

  CHECK_THROWS_AS(normalize(std::vector<double>{0.0, 0.0}), ZeroNorm);
  CHECK_THROWS_AS(normalize(std::vector<double>{1.0}), DimensionTooSmall);
}

TEST_CASE("unit vector construction enforces the norm invariant") {
  CHECK_THROWS_AS(UnitVector({0.6, 0.7}), NotUnitNorm);
  CHECK_THROWS_AS(UnitVector({1.0}), DimensionTooSmall);
  // within tolerance: silently renormalized
  const UnitVector u({1.0 + 4e-13, 0.0});
  CHECK(std::abs(u[0] * u[0] + u[1] * u[1] - 1.0) < 1e-15);
}

TEST_CASE("distances match their closed forms") {
  const UnitVector e1 = from_angle(0.0);
  const UnitVector e2 = from_angle(0.5 * kPi);
  const UnitVector me1 = from_angle(kPi);

  CHECK(distance(DistanceKind::Arc, e1, e2) == Catch::Approx(0.5 * kPi));
  CHECK(distance(DistanceKind::Cosine, e1, me1) == Catch::Approx(2.0));
  CHECK(distance(DistanceKind::Chord, e1, e2) ==
        Catch::Approx(std::sqrt(2.0)));

  const UnitVector a = normalize(std::vector<double>{1.0, 0.0, 0.0});
  const UnitVector b = normalize(std::vector<double>{1.0, 0.0});
  CHECK_THROWS_AS(distance(DistanceKind::Arc, a, b), DimensionMismatch);
}

TEST_CASE("distance suprema") {
  CHECK(sup_distance(DistanceKind::Arc) == Catch::Approx(kPi));
  CHECK(sup_distance(DistanceKind::Cosine) == 2.0);
  CHECK(sup_distance(DistanceKind::Chord) == 2.0);
}

TEST_CASE("cap radius from angle") {
  CHECK(cap_radius_from_angle(DistanceKind::Cosine, 0.5 * kPi) ==
        Catch::Approx(1.0));
  CHECK(cap_radius_from_angle(DistanceKind::Cosine, 0.25 * kPi) ==
        Catch::Approx(1.0 - std::sqrt(2.0) / 2.0));
  CHECK(cap_radius_from_angle(DistanceKind::Chord, 0.5 * kPi) ==
        Catch::Approx(std::sqrt(2.0)));

  // at the half sphere's limit angle pi the cap radius reaches the supremum
  for (DistanceKind kind : {DistanceKind::Arc, DistanceKind::Cosine,
                            DistanceKind::Chord})
    CHECK(cap_radius_from_angle(kind, kPi) ==
          Catch::Approx(sup_distance(kind)));

  CHECK_THROWS_AS(cap_radius_from_angle(DistanceKind::Arc, 0.0),
                  AngleOutOfRange);
  CHECK_THROWS_AS(cap_radius_from_angle(DistanceKind::Arc, 3.2),
                  AngleOutOfRange);
}

TEST_CASE("lat/lon conversion uses the geographic convention") {
  const UnitVector north = from_latlon(90.0, 0.0);
  CHECK(north[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(north[1] == Catch::Approx(0.0).margin(1e-15));
  CHECK(north[2] == Catch::Approx(1.0));

  const UnitVector equator = from_latlon(0.0, 0.0);
  CHECK(equator[0] == Catch::Approx(1.0));

  const UnitVector east = from_latlon(0.0, 90.0);
  CHECK(east[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(east[1] == Catch::Approx(1.0));

  const UnitVector anti = from_latlon(0.0, 180.0);
  CHECK(anti[0] == Catch::Approx(-1.0));

  CHECK_THROWS_AS(from_latlon(91.0, 0.0), LatitudeOutOfRange);
  CHECK_THROWS_AS(from_latlon(-90.5, 0.0), LatitudeOutOfRange);
}

TEST_CASE("from_angle hits the axes") {
  CHECK(from_angle(0.0)[0] == Catch::Approx(1.0));
  CHECK(from_angle(kPi)[0] == Catch::Approx(-1.0));
  CHECK(from_angle(0.5 * kPi)[1] == Catch::Approx(1.0));
}

TEST_CASE("random rotations are orthogonal, deterministic isometries") {
  for (int q : {2, 3, 5}) {
    const RotationMatrix o = random_rotation(q, 7);
    // orthogonality is checked by the constructor; spot-check an entry pair
    double s = 0.0;
    for (int k = 0; k < q; ++k) s += o.at(k, 0) * o.at(k, 0);
    CHECK(s == Catch::Approx(1.0).epsilon(1e-10));
  }

  const RotationMatrix a = random_rotation(5, 7);
  const RotationMatrix b = random_rotation(5, 7);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(a.at(i, j) == b.at(i, j));

  Rng rng(21);
  const UnitVector x = random_point(rng, 5);
  const UnitVector y = random_point(rng, 5);
  const RotationMatrix o = random_rotation(5, 99);
  const UnitVector ox = apply_rotation(o, x);
  const UnitVector oy = apply_rotation(o, y);
  double n = 0.0;
  for (int i = 0; i < 5; ++i) n += ox[static_cast<std::size_t>(i)] *
                                   ox[static_cast<std::size_t>(i)];
  CHECK(std::abs(n - 1.0) < 1e-12);
  for (DistanceKind kind : {DistanceKind::Arc, DistanceKind::Cosine,
                            DistanceKind::Chord})
    CHECK(std::abs(distance(kind, ox, oy) - distance(kind, x, y)) < 1e-10);
}

TEST_CASE("identity and planar rotations act as expected") {
  const RotationMatrix id = RotationMatrix::identity(3);
  const UnitVector x = normalize(std::vector<double>{0.3, -0.4, 0.5});
  const UnitVector ix = apply_rotation(id, x);
  for (int i = 0; i < 3; ++i)
    CHECK(ix[static_cast<std::size_t>(i)] ==
          Catch::Approx(x[static_cast<std::size_t>(i)]));

  // 90-degree planar rotation sends e1 to e2
  const RotationMatrix quarter(2, {0.0, -1.0, 1.0, 0.0});
  const UnitVector e2 = apply_rotation(quarter, from_angle(0.0));
  CHECK(e2[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(e2[1] == Catch::Approx(1.0));

  CHECK_THROWS_AS(apply_rotation(quarter, x), DimensionMismatch);
  CHECK_THROWS_AS(RotationMatrix(2, {1.0, 1.0, 0.0, 1.0}), InvalidArgument);
}

TEST_CASE("distance axioms hold on random pairs") {
  Rng rng(404);
  for (int rep = 0; rep < 200; ++rep) {
    const int q = 2 + static_cast<int>(rng.next_u64() % 4);
    const UnitVector x = random_point(rng, q);
    const UnitVector y = random_point(rng, q);
    for (DistanceKind kind : {DistanceKind::Arc, DistanceKind::Cosine,
                              DistanceKind::Chord}) {
      const double d = distance(kind, x, y);
      CHECK(d >= 0.0);
      CHECK(d <= sup_distance(kind));
      CHECK(distance(kind, x, x) == Catch::Approx(0.0).margin(1e-7));
      CHECK(distance(kind, y, x) == d);
    }
    // algebraic relations between the three kinds
    const double dcos = distance(DistanceKind::Cosine, x, y);
    const double dchord = distance(DistanceKind::Chord, x, y);
    const double darc = distance(DistanceKind::Arc, x, y);
    CHECK(std::abs(dchord * dchord - 2.0 * dcos) < 1e-10);
    CHECK(std::abs(darc - std::acos(1.0 - dcos)) < 1e-10);
  }
}

TEST_CASE("rng streams are reproducible and splittable") {
  Rng a(12345);
  Rng b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) == mix_seed(1, 0));

  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform01();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("rng gamma matches its mean and variance") {
  Rng rng(2024);
  for (double shape : {0.5, 1.5, 4.0}) {
    double sum = 0.0;
    double sq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const double g = rng.gamma(shape);
      sum += g;
      sq += g * g;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(mean == Catch::Approx(shape).margin(4.0 * std::sqrt(shape / n)));
    CHECK(var == Catch::Approx(shape).epsilon(0.1));
  }
}
