#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "inscribe/curves.hpp"
#include "inscribe/errors.hpp"

namespace inscribe {

namespace {

// Closed interpolating cubic with knots in [0, 1] and complex ordinates.
struct PeriodicCubic {
  std::vector<double> knots;     // n + 1 values, knots[0] = 0, knots[n] = 1
  std::vector<Point> values;     // n + 1 values, values[n] = values[0]
  std::vector<Point> second;     // n + 1 second derivatives, second[n] = second[0]

  std::size_t segment(double t) const {
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    std::size_t i = static_cast<std::size_t>(std::distance(knots.begin(), it));
    i = (i == 0) ? 0 : i - 1;
    return std::min(i, knots.size() - 2);
  }

  Point value(double t) const {
    const std::size_t i = segment(t);
    const double h = knots[i + 1] - knots[i];
    const double a = knots[i + 1] - t;
    const double b = t - knots[i];
    return second[i] * (a * a * a / (6 * h)) + second[i + 1] * (b * b * b / (6 * h)) +
           (values[i] / h - second[i] * (h / 6)) * a + (values[i + 1] / h - second[i + 1] * (h / 6)) * b;
  }

  Point derivative(double t) const {
    const std::size_t i = segment(t);
    const double h = knots[i + 1] - knots[i];
    const double a = knots[i + 1] - t;
    const double b = t - knots[i];
    return -second[i] * (a * a / (2 * h)) + second[i + 1] * (b * b / (2 * h)) -
           (values[i] / h - second[i] * (h / 6)) + (values[i + 1] / h - second[i + 1] * (h / 6));
  }
};

PeriodicCubic fit(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  PeriodicCubic s;
  s.values = pts;
  s.values.push_back(pts.front());

  std::vector<double> chord(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    chord[i] = std::abs(s.values[i + 1] - s.values[i]);
    total += chord[i];
  }
  s.knots.resize(n + 1);
  s.knots[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) s.knots[i + 1] = s.knots[i] + chord[i] / total;
  s.knots[n] = 1.0;

  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = s.knots[i + 1] - s.knots[i];

  // Cyclic tridiagonal system for the second derivatives.
  using Triplet = Eigen::Triplet<double>;
  std::vector<Triplet> entries;
  entries.reserve(3 * n);
  Eigen::MatrixXd rhs(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    entries.emplace_back(i, prev, h[prev]);
    entries.emplace_back(i, i, 2.0 * (h[prev] + h[i]));
    entries.emplace_back(i, next, h[i]);
    const Point slope = (s.values[i + 1] - s.values[i]) / h[i] -
                        (s.values[i] - s.values[prev]) / h[prev];
    rhs(static_cast<Eigen::Index>(i), 0) = 6.0 * slope.real();
    rhs(static_cast<Eigen::Index>(i), 1) = 6.0 * slope.imag();
  }
  Eigen::SparseMatrix<double> A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  A.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw InvalidParameter("spline system is singular");
  const Eigen::MatrixXd m = lu.solve(rhs);

  s.second.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    s.second[i] = {m(static_cast<Eigen::Index>(i), 0), m(static_cast<Eigen::Index>(i), 1)};
  }
  s.second[n] = s.second[0];
  return s;
}

}  // namespace

Curve make_spline(const std::vector<Point>& points) {
  if (points.size() < 4) throw InvalidParameter("spline needs at least 4 points");
  double scale = 0.0;
  for (const Point& p : points) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw InvalidParameter("spline point is not finite");
    }
    scale = std::max(scale, std::abs(p));
  }
  const double eps = 1e-12 * std::max(scale, 1.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (std::abs(points[i] - points[j]) <= eps) {
        throw InvalidParameter("spline points must be pairwise distinct");
      }
    }
  }

  auto cubic = std::make_shared<const PeriodicCubic>(fit(points));
  Curve c("spline(" + std::to_string(points.size()) + ")",
          [cubic](double t) { return cubic->value(t); },
          [cubic](double t) { return cubic->derivative(t); });

  const int samples = std::max(256, 8 * static_cast<int>(points.size()));
  if (!validate(c, samples).is_embedded_numerically) {
    throw EmbeddingFailure("spline through the given points is not embedded");
  }
  return c;
}

}  // namespace inscribe
