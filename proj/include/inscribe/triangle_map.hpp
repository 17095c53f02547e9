#pragma once

#include <array>
#include <utility>

#include <Eigen/Core>

#include "inscribe/curves.hpp"
#include "inscribe/shape_space.hpp"

namespace inscribe {

// Curve parameters (t0, t1, t2) on the 3-torus.
struct ParamTriple {
  std::array<double, 3> t{};

  double operator[](int k) const { return t[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return t[static_cast<std::size_t>(k)]; }

  // Every coordinate reduced into [0, 1).
  ParamTriple wrapped() const;
  // Smallest of the three pairwise circle distances.
  double min_pairwise_distance() const;
};

// Distance between two points of the parameter circle, in [0, 1/2].
double torus_distance(double a, double b);
// max_k torus_distance(a[k], b[k])
double triple_distance(const ParamTriple& a, const ParamTriple& b);

// Collar coordinate at the diagonal: parameter t and a point (u, v) of the
// circle of radius 1/2.
struct BoundaryDatum {
  double t = 0.0;
  double u = 0.5;
  double v = 0.0;

  // (u, v) = (cos alpha, sin alpha) / 2
  static BoundaryDatum from_angle(double t, double alpha);
};

Triangle inscribed_triangle(const Curve& c, const ParamTriple& p);

// Shape of the triangle (c(t0), c(t1), c(t2)). Throws DiagonalPoint when the
// three curve points coincide within 1e-14.
Shape F(const Curve& c, const ParamTriple& p);

// Directional derivative of (c(t1) - c(t0), c(t2) - c(t0)) along lam.
std::pair<Point, Point> tangent_F1(const Curve& c, const ParamTriple& p,
                                   const std::array<double, 3>& lam);

// 4x3 derivative of the unit-sphere valued map F: the tangent_F1 columns,
// projected orthogonally to the current representative and divided by its norm.
Eigen::Matrix<double, 4, 3> jacobian_F(const Curve& c, const ParamTriple& p);

enum class CriticalKind { regular, parallel, concurrent };

struct CriticalReport {
  bool critical = false;
  // Smallest singular value of jacobian_F.
  double sigma_min = 0.0;
  // Geometric reading of the three tangent lines.
  CriticalKind diagnostic = CriticalKind::regular;
  bool geometric_critical() const { return diagnostic != CriticalKind::regular; }
};

// `tol` bounds sigma_min; `geometric_tol` is used for the tangent-line tests
// (defaults to tol). Throws InvalidParameter on nonpositive tolerances.
CriticalReport is_critical(const Curve& c, const ParamTriple& p, double tol,
                           double geometric_tol = 0.0);

// Tangent-line reading alone: parallel when the three unit tangents are pairwise
// parallel, concurrent when the three lines meet (projective determinant).
CriticalKind tangent_configuration(const Curve& c, const ParamTriple& p, double tol);

// Flat limit shape (u c'(t), v c'(t)) at the blown-up diagonal.
// Throws NotC1 for curves not flagged c1.
Shape boundary_shape(const Curve& c, const BoundaryDatum& b);

std::string to_string(CriticalKind k);

}  // namespace inscribe
