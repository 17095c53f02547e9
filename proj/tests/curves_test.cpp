#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "inscribe/curves.hpp"
#include "inscribe/errors.hpp"
#include "test_support.hpp"

using namespace inscribe;
using std::numbers::pi;

namespace {

const Point kI{0.0, 1.0};

std::vector<Curve> smooth_builtins() {
  return {make_circle(), make_ellipse(2.0, 1.0), make_ellipse(1.5, 1.0), make_star(0.2, 5),
          make_star(0.15, 4), make_spline(oracle::perturbed_circle_points(12, 0.1, 11))};
}

}  // namespace

TEST(Circle, ValueAndDerivative) {
  const Curve c = make_circle();
  EXPECT_NEAR(std::abs(c(0.0) - Point(1.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c.derivative(0.0) - Point(0.0, 2.0 * pi)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(c(0.25) - kI), 0.0, 1e-15);
  EXPECT_TRUE(c.is_c1());
}

TEST(Circle, ValidateSpeed) {
  const CurveValidationReport r = validate(make_circle(), 256);
  EXPECT_NEAR(r.min_speed, 2.0 * pi, 1e-9);
  EXPECT_TRUE(r.is_embedded_numerically);
  EXPECT_TRUE(r.derivative_periodic);
  EXPECT_EQ(r.samples_used, 256);
  // chord / arc ratio on the circle: 2 sin(pi d) / d is smallest at d = 1/2
  EXPECT_NEAR(r.min_separation_ratio, 4.0, 1e-9);
}

TEST(Ellipse, MinSpeedAtMinorAxisEnds) {
  // speed 2 pi sqrt(a^2 sin^2 + b^2 cos^2), smallest where sin = 0
  const CurveValidationReport r = validate(make_ellipse(2.0, 1.0), 256);
  EXPECT_NEAR(r.min_speed, 2.0 * pi, 1e-6);
  EXPECT_TRUE(r.is_embedded_numerically);
}

TEST(Lemniscate, CornerAtSeam) {
  const Curve c = make_half_lemniscate();
  EXPECT_FALSE(c.is_c1());
  EXPECT_NEAR(std::abs(c(0.5) - Point(1.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c(0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c(1.0 - 1e-12)), 0.0, 1e-9);

  // one-sided tangents: pi e^{-i pi/4} leaving the corner, -pi e^{i pi/4} arriving
  EXPECT_NEAR(std::abs(c.derivative(0.0) - std::polar(pi, -pi / 4.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c.derivative(1.0 - 1e-12) + std::polar(pi, pi / 4.0)), 0.0, 1e-9);

  const CurveValidationReport r = validate(c, 256);
  EXPECT_TRUE(r.is_embedded_numerically);
  EXPECT_FALSE(r.derivative_periodic);
}

TEST(Curves, DerivativeMatchesFiniteDifferences) {
  auto all = smooth_builtins();
  all.push_back(make_half_lemniscate());
  for (const Curve& c : all) {
    double worst = 0.0;
    for (int i = 0; i < 1024; ++i) {
      const double t = (i + 0.37) / 1024.0;
      const double h = 1e-6;
      const Point fd = (c(t + h) - c(t - h)) / (2.0 * h);
      const Point d = c.derivative(t);
      worst = std::max(worst, std::abs(fd - d) / std::max(1.0, std::abs(d)));
    }
    EXPECT_LT(worst, 1e-5) << c.name();
  }
}

TEST(Curves, Periodicity) {
  for (const Curve& c : smooth_builtins()) {
    for (double t : {0.0, 0.1, 0.731}) {
      EXPECT_NEAR(std::abs(c(t) - c(t + 1.0)), 0.0, 1e-12) << c.name();
      EXPECT_NEAR(std::abs(c(t) - c(t - 3.0)), 0.0, 1e-12) << c.name();
    }
    EXPECT_TRUE(validate(c, 256).derivative_periodic) << c.name();
  }
}

TEST(Curves, WrapStaysInUnitInterval) {
  for (double t : {-1e-17, -1.0, 1.0, 2.5, -0.25, 1.0 - 1e-17}) {
    const double w = Curve::wrap(t);
    EXPECT_GE(w, 0.0);
    EXPECT_LT(w, 1.0);
  }
}

TEST(Curves, ParameterErrors) {
  EXPECT_THROW(make_ellipse(0.0, 1.0), InvalidParameter);
  EXPECT_THROW(make_ellipse(1.0, -2.0), InvalidParameter);
  EXPECT_THROW(make_star(0.1, 1), InvalidParameter);
  EXPECT_THROW(make_star(1.0, 3), Error);
  EXPECT_THROW(validate(make_circle(), 8), InvalidParameter);
}

TEST(Star, Radius) {
  const Curve c = make_star(0.2, 5);
  EXPECT_NEAR(std::abs(c(0.0)), 1.2, 1e-15);
  EXPECT_NEAR(std::abs(c(0.1)), 0.8, 1e-12);
}

TEST(Spline, InterpolatesAndReproducesCircle) {
  std::vector<Point> pts;
  for (int i = 0; i < 32; ++i) pts.push_back(std::polar(1.0, 2.0 * pi * i / 32));
  const Curve c = make_spline(pts);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) worst = std::max(worst, std::abs(std::abs(c(i / 2000.0)) - 1.0));
  EXPECT_LT(worst, 1e-3);
  // knots are hit exactly
  double knot = 1e9;
  for (const Point& p : pts) {
    double best = 1e9;
    for (int i = 0; i < 32; ++i) best = std::min(best, std::abs(c(i / 32.0) - p));
    knot = std::min(knot, best);
  }
  EXPECT_LT(knot, 1e-12);
  EXPECT_NEAR(std::abs(c(0.0) - pts[0]), 0.0, 1e-12);
}

TEST(Spline, Errors) {
  EXPECT_THROW(make_spline({0.0, 1.0, kI}), InvalidParameter);
  EXPECT_THROW(make_spline({0.0, 1.0, 1.0, kI}), InvalidParameter);
  // a bow tie crosses itself
  EXPECT_THROW(make_spline({0.0, 1.0 + 1.0 * kI, 1.0, 1.0 * kI}), EmbeddingFailure);
}

TEST(Blend, Pointwise) {
  const Curve a = make_circle(), b = make_ellipse(2.0, 1.0);
  const Curve m = blend(a, b, 0.25);
  EXPECT_NEAR(std::abs(m(0.1) - (0.75 * a(0.1) + 0.25 * b(0.1))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m.derivative(0.3) - (0.75 * a.derivative(0.3) + 0.25 * b.derivative(0.3))),
              0.0, 1e-13);
  EXPECT_TRUE(m.is_c1());
  EXPECT_FALSE(blend(a, make_half_lemniscate(), 0.5).is_c1());
}

TEST(PointFile, ReadsAndReportsLine) {
  const auto pts = read_point_file(INSCRIBE_TEST_DATA "/pentagon.txt");
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_EQ(pts[1], Point(0.31, 0.95));
  try {
    read_point_file(INSCRIBE_TEST_DATA "/bad.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(read_point_file(INSCRIBE_TEST_DATA "/missing.txt"), Error);
}
