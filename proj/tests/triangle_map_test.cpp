#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "inscribe/errors.hpp"
#include "inscribe/triangle_map.hpp"
#include "test_support.hpp"

using namespace inscribe;
using std::numbers::pi;

namespace {

const Point kI{0.0, 1.0};

std::vector<Curve> smooth_builtins() {
  return {make_circle(), make_ellipse(2.0, 1.0), make_ellipse(1.5, 1.0), make_star(0.2, 5),
          make_star(0.15, 4), make_spline(oracle::perturbed_circle_points(12, 0.1, 11))};
}

ParamTriple random_triple(std::mt19937_64& rng, double min_gap) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    ParamTriple p{{u(rng), u(rng), u(rng)}};
    if (p.min_pairwise_distance() >= min_gap) return p;
  }
}

}  // namespace

TEST(ParamTriple, Distances) {
  EXPECT_DOUBLE_EQ(torus_distance(0.1, 0.9), 0.2);
  EXPECT_DOUBLE_EQ(torus_distance(0.25, 0.75), 0.5);
  const ParamTriple p{{0.95, 0.05, 0.5}};
  EXPECT_NEAR(p.min_pairwise_distance(), 0.1, 1e-15);
  EXPECT_NEAR(triple_distance(p, ParamTriple{{-0.05, 1.05, 0.45}}), 0.05, 1e-15);
  const ParamTriple w = ParamTriple{{-0.25, 1.5, 2.0}}.wrapped();
  EXPECT_DOUBLE_EQ(w[0], 0.75);
  EXPECT_DOUBLE_EQ(w[1], 0.5);
  EXPECT_DOUBLE_EQ(w[2], 0.0);
}

TEST(F, CircleRightIsosceles) {
  const Curve c = make_circle();
  // circumcenter of (0, 1, i) is (1 + i)/2, so the arguments give the triple
  const Point o = oracle::circumcenter(0.0, 1.0, kI);
  EXPECT_NEAR(std::abs(o - Point(0.5, 0.5)), 0.0, 1e-15);
  const ParamTriple p{{oracle::turns(0.0 - o), oracle::turns(1.0 - o), oracle::turns(kI - o)}};
  EXPECT_NEAR(p[0], 0.625, 1e-15);
  EXPECT_NEAR(p[1], 0.875, 1e-15);
  EXPECT_NEAR(p[2], 0.375, 1e-15);
  EXPECT_LT(shape_distance(F(c, p), shape_of({0.0, 1.0, kI})), 1e-14);
}

TEST(F, CircleEquilateralAndDegeneratePair) {
  const Curve c = make_circle();
  EXPECT_NEAR(std::abs(hopf(F(c, ParamTriple{{0.0, 1.0 / 3.0, 2.0 / 3.0}})).value() -
                       std::polar(1.0, -pi / 3.0)),
              0.0, 1e-12);
  EXPECT_NEAR(std::abs(hopf(F(c, ParamTriple{{0.1, 0.6, 0.6}})).value() - 1.0), 0.0, 1e-15);
  EXPECT_THROW(F(c, ParamTriple{{0.3, 0.3, 1.3}}), DiagonalPoint);
}

TEST(F, MatchesRawSamples) {
  std::mt19937_64 rng(21);
  for (const Curve& c : smooth_builtins()) {
    for (int i = 0; i < 50; ++i) {
      const ParamTriple p = random_triple(rng, 1e-3);
      const auto ref = oracle::unit_shape(c(p[0]), c(p[1]), c(p[2]));
      const Eigen::Vector4d v = F(c, p).as_vector();
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(v[k], ref[k], 1e-13);
    }
  }
}

TEST(TangentF1, ZeroAndExample) {
  const Curve c = make_circle();
  const ParamTriple p{{0.0, 0.25, 0.5}};
  const auto [a0, b0] = tangent_F1(c, p, {0.0, 0.0, 0.0});
  EXPECT_EQ(a0, Point(0.0));
  EXPECT_EQ(b0, Point(0.0));
  // moving only t1 along the circle at t = 1/4: c' = 2 pi (-1, 0)
  const auto [a, b] = tangent_F1(c, p, {0.0, 1.0, 0.0});
  EXPECT_NEAR(std::abs(a - Point(-2.0 * pi, 0.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(b), 0.0, 1e-15);
  // moving only t0 at t = 0: both differences move by -c'(0) = (0, -2 pi)
  const auto [a1, b1] = tangent_F1(c, p, {1.0, 0.0, 0.0});
  EXPECT_NEAR(std::abs(a1 - Point(0.0, -2.0 * pi)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(b1 - Point(0.0, -2.0 * pi)), 0.0, 1e-13);
}

TEST(TangentF1, FiniteDifferencesAndLinearity) {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> g;
  for (const Curve& c : smooth_builtins()) {
    for (int i = 0; i < 60; ++i) {
      const ParamTriple p = random_triple(rng, 0.01);
      const std::array<double, 3> lam{g(rng), g(rng), g(rng)};
      const std::array<double, 3> mu{g(rng), g(rng), g(rng)};
      const double h = 1e-6;
      auto pair_at = [&](double s) {
        const Point z0 = c(p[0] + s * lam[0]), z1 = c(p[1] + s * lam[1]), z2 = c(p[2] + s * lam[2]);
        return std::pair<Point, Point>{z1 - z0, z2 - z0};
      };
      const auto [ap, bp] = pair_at(h);
      const auto [am, bm] = pair_at(-h);
      const auto [a, b] = tangent_F1(c, p, lam);
      const double scale = std::max(1.0, std::abs(a) + std::abs(b));
      EXPECT_LT((std::abs((ap - am) / (2 * h) - a) + std::abs((bp - bm) / (2 * h) - b)) / scale, 1e-5)
          << c.name();

      const auto [ma, mb] = tangent_F1(c, p, mu);
      const auto [sa, sb] =
          tangent_F1(c, p, {2 * lam[0] - mu[0], 2 * lam[1] - mu[1], 2 * lam[2] - mu[2]});
      EXPECT_NEAR(std::abs(sa - (2.0 * a - ma)), 0.0, 1e-11 * scale);
      EXPECT_NEAR(std::abs(sb - (2.0 * b - mb)), 0.0, 1e-11 * scale);
    }
  }
}

TEST(JacobianF, TangentToSphereAndMatchesFiniteDifferences) {
  std::mt19937_64 rng(23);
  for (const Curve& c : smooth_builtins()) {
    for (int i = 0; i < 30; ++i) {
      const ParamTriple p = random_triple(rng, 0.02);
      const Eigen::Matrix<double, 4, 3> J = jacobian_F(c, p);
      const Eigen::Vector4d x = F(c, p).as_vector();
      // the ray direction is in the kernel of the projection
      EXPECT_LT((x.transpose() * J).norm(), 1e-12 * std::max(1.0, J.norm())) << c.name();
      for (int col = 0; col < 3; ++col) {
        ParamTriple plus = p, minus = p;
        plus[col] += 1e-6;
        minus[col] -= 1e-6;
        const auto fp = oracle::unit_shape(c(plus[0]), c(plus[1]), c(plus[2]));
        const auto fm = oracle::unit_shape(c(minus[0]), c(minus[1]), c(minus[2]));
        for (int r = 0; r < 4; ++r) {
          EXPECT_NEAR((fp[r] - fm[r]) / 2e-6, J(r, col), 1e-5 * std::max(1.0, J.norm()))
              << c.name();
        }
      }
    }
  }
}

TEST(IsCritical, CircleConfigurationsAreRegular) {
  const Curve c = make_circle();
  const CriticalReport eq = is_critical(c, ParamTriple{{0.0, 1.0 / 3.0, 2.0 / 3.0}}, 1e-8, 1e-6);
  EXPECT_FALSE(eq.critical);
  EXPECT_EQ(eq.diagnostic, CriticalKind::regular);
  EXPECT_GT(eq.sigma_min, 1.0);

  // Tangent lines x = 1, y = 1, x = -1: two are parallel, the third meets them,
  // so they are neither all parallel nor concurrent.
  const ParamTriple quarter{{0.0, 0.25, 0.5}};
  EXPECT_EQ(tangent_configuration(c, quarter, 1e-6), CriticalKind::regular);
  const CriticalReport q = is_critical(c, quarter, 1e-8, 1e-6);
  EXPECT_FALSE(q.critical);
  EXPECT_GT(q.sigma_min, 1.0);

  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    const CriticalReport r = is_critical(c, random_triple(rng, 1e-3), 1e-8, 1e-6);
    EXPECT_FALSE(r.critical);
    EXPECT_FALSE(r.geometric_critical());
  }
}

TEST(IsCritical, PrescribedParallelTangents) {
  const Curve base = make_circle();
  const std::array<double, 3> params{0.1, 0.45, 0.8};
  const Curve c = oracle::with_tangents(base, params, {Point(1.0, 2.0), Point(-2.0, -4.0), Point(3.0, 6.0)});
  const ParamTriple p{{params[0], params[1], params[2]}};
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(std::abs(c(params[k]) - base(params[k])), 0.0, 1e-15);
  const CriticalReport r = is_critical(c, p, 1e-8, 1e-6);
  EXPECT_TRUE(r.critical);
  EXPECT_LT(r.sigma_min, 1e-10);
  EXPECT_EQ(r.diagnostic, CriticalKind::parallel);
}

TEST(IsCritical, PrescribedConcurrentTangents) {
  const Curve base = make_circle();
  const std::array<double, 3> params{0.05, 0.4, 0.7};
  const Point meet{0.2, -0.3};
  std::array<Point, 3> dirs{};
  for (int k = 0; k < 3; ++k) dirs[k] = 3.0 * (meet - base(params[k]));
  const Curve c = oracle::with_tangents(base, params, dirs);
  const CriticalReport r = is_critical(c, ParamTriple{{params[0], params[1], params[2]}}, 1e-8, 1e-6);
  EXPECT_TRUE(r.critical);
  EXPECT_LT(r.sigma_min, 1e-10);
  EXPECT_EQ(r.diagnostic, CriticalKind::concurrent);
}

TEST(IsCritical, RandomConcurrentConstructions) {
  std::mt19937_64 rng(25);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double t0 = u(rng);
    const std::array<double, 3> params{t0, t0 + 0.2 + 0.1 * u(rng), t0 + 0.55 + 0.1 * u(rng)};
    const Point meet{g(rng), g(rng)};
    std::array<Point, 3> dirs{};
    for (int k = 0; k < 3; ++k) {
      dirs[k] = (0.5 + u(rng)) * (meet - make_circle()(params[k]));
    }
    const Curve c = oracle::with_tangents(make_circle(), params, dirs);
    const CriticalReport r = is_critical(c, ParamTriple{{params[0], params[1], params[2]}}, 1e-8, 1e-6);
    EXPECT_TRUE(r.critical) << i << " sigma " << r.sigma_min;
    EXPECT_TRUE(r.geometric_critical()) << i;
  }
}

TEST(IsCritical, RejectsBadTolerance) {
  EXPECT_THROW(is_critical(make_circle(), ParamTriple{{0.0, 0.3, 0.6}}, 0.0), InvalidParameter);
}

TEST(BoundaryShape, FlatLimitOnCircle) {
  const Curve c = make_circle();
  const Shape s = boundary_shape(c, BoundaryDatum::from_angle(0.0, 0.0));
  EXPECT_TRUE(hopf(s).is_infinite());
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Shape b = boundary_shape(c, BoundaryDatum::from_angle(u(rng), 2.0 * pi * u(rng)));
    EXPECT_LT(std::abs(b.det()), 1e-14);
    EXPECT_TRUE(classify(b, 1e-9).has(Locus::flat));
  }
}

TEST(BoundaryShape, ContinuousExtension) {
  const Curve c = make_spline(oracle::perturbed_circle_points(12, 0.1, 11));
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const BoundaryDatum b = BoundaryDatum::from_angle(u(rng), 2.0 * pi * u(rng));
    const Shape limit = boundary_shape(c, b);
    double previous = 1e9;
    for (double lam : {1e-2, 1e-3, 1e-4, 1e-5}) {
      const double d = shape_distance(F(c, ParamTriple{{b.t, b.t + lam * b.u, b.t + lam * b.v}}), limit);
      EXPECT_LT(d, previous * 0.5 + 1e-12);
      previous = d;
    }
    EXPECT_LT(previous, 1e-3);
  }
}

TEST(BoundaryShape, Errors) {
  EXPECT_THROW(boundary_shape(make_half_lemniscate(), BoundaryDatum{0.3, 0.5, 0.0}), NotC1);
  EXPECT_THROW(boundary_shape(make_circle(), BoundaryDatum{0.3, 0.4, 0.0}), InvalidParameter);
}
