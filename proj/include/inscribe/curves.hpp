#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "inscribe/shape_space.hpp"

namespace inscribe {

enum class Smoothness { c1, non_c1 };

// Closed parametric curve on the parameter circle [0, 1). Evaluators receive t
// already reduced mod 1. Immutable once built, so copies share evaluators.
class Curve {
 public:
  using Evaluator = std::function<Point(double)>;

  Curve(std::string name, Evaluator value, Evaluator derivative,
        Smoothness smoothness = Smoothness::c1);

  Point value(double t) const { return value_(wrap(t)); }
  Point derivative(double t) const { return derivative_(wrap(t)); }
  Point operator()(double t) const { return value(t); }

  const std::string& name() const { return name_; }
  Smoothness smoothness() const { return smoothness_; }
  bool is_c1() const { return smoothness_ == Smoothness::c1; }

  // Reduces t into [0, 1).
  static double wrap(double t);

 private:
  std::string name_;
  Evaluator value_;
  Evaluator derivative_;
  Smoothness smoothness_;
};

struct CurveValidationReport {
  double min_speed = 0.0;
  // min |c(t) - c(s)| / torus_distance(t, s) over grid pairs with torus distance
  // >= 2 / samples. Forced to 0 when the sampled polygon crosses itself.
  double min_separation_ratio = 0.0;
  bool is_embedded_numerically = false;
  // |c'(0) - c'(1-)| / |c'(0)|; large for curves with a corner at the seam.
  double derivative_seam_jump = 0.0;
  bool derivative_periodic = false;
  int samples_used = 0;
};

// Throws InvalidParameter when n_samples < 16.
CurveValidationReport validate(const Curve& c, int n_samples);

Curve make_circle();
Curve make_ellipse(double a, double b);
// Polar star r(theta) = 1 + eps cos(k theta).
Curve make_star(double eps, int k);
// Periodic cubic spline through `points` (closed automatically, chord-length
// parametrized). Needs at least 4 pairwise distinct points.
Curve make_spline(const std::vector<Point>& points);
// Half-lemniscate r = cos 2 theta, |theta| <= pi/4. Has a right-angle corner at
// the origin (t = 0) and is flagged non_c1.
Curve make_half_lemniscate();

// Pointwise blend (1 - s) a + s b. Flagged c1 only when both inputs are.
Curve blend(const Curve& a, const Curve& b, double s);

// Reads "x y" pairs, one per line; '#' starts a comment.
std::vector<Point> read_point_file(const std::string& path);

}  // namespace inscribe
