#include "inscribe/triangle_map.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "inscribe/errors.hpp"

namespace inscribe {

namespace {

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

Eigen::Vector4d as_r4(Point a, Point b) { return {a.real(), a.imag(), b.real(), b.imag()}; }

}  // namespace

ParamTriple ParamTriple::wrapped() const {
  return ParamTriple{{Curve::wrap(t[0]), Curve::wrap(t[1]), Curve::wrap(t[2])}};
}

double ParamTriple::min_pairwise_distance() const {
  return std::min({torus_distance(t[0], t[1]), torus_distance(t[1], t[2]),
                   torus_distance(t[0], t[2])});
}

double torus_distance(double a, double b) {
  const double d = Curve::wrap(a - b);
  return std::min(d, 1.0 - d);
}

double triple_distance(const ParamTriple& a, const ParamTriple& b) {
  return std::max({torus_distance(a[0], b[0]), torus_distance(a[1], b[1]),
                   torus_distance(a[2], b[2])});
}

BoundaryDatum BoundaryDatum::from_angle(double t, double alpha) {
  return BoundaryDatum{t, 0.5 * std::cos(alpha), 0.5 * std::sin(alpha)};
}

Triangle inscribed_triangle(const Curve& c, const ParamTriple& p) {
  return Triangle{c.value(p[0]), c.value(p[1]), c.value(p[2])};
}

Shape F(const Curve& c, const ParamTriple& p) {
  const Triangle tri = inscribed_triangle(c, p);
  const double spread =
      std::max({std::abs(tri.z1 - tri.z0), std::abs(tri.z2 - tri.z0), std::abs(tri.z2 - tri.z1)});
  if (spread <= 1e-14) throw DiagonalPoint("parameter triple maps onto a single curve point");
  return shape_of(tri);
}

std::pair<Point, Point> tangent_F1(const Curve& c, const ParamTriple& p,
                                   const std::array<double, 3>& lam) {
  const Point d0 = lam[0] * c.derivative(p[0]);
  return {lam[1] * c.derivative(p[1]) - d0, lam[2] * c.derivative(p[2]) - d0};
}

Eigen::Matrix<double, 4, 3> jacobian_F(const Curve& c, const ParamTriple& p) {
  const Triangle tri = inscribed_triangle(c, p);
  const Eigen::Vector4d x = as_r4(tri.z1 - tri.z0, tri.z2 - tri.z0);
  const double n = x.norm();
  if (!(n > 0.0)) throw DiagonalPoint("parameter triple maps onto a single curve point");
  const Eigen::Vector4d s = x / n;

  const Point d0 = c.derivative(p[0]);
  const Point d1 = c.derivative(p[1]);
  const Point d2 = c.derivative(p[2]);
  Eigen::Matrix<double, 4, 3> a;
  a.col(0) = as_r4(-d0, -d0);
  a.col(1) = as_r4(d1, 0.0);
  a.col(2) = as_r4(0.0, d2);

  const Eigen::Matrix4d proj = Eigen::Matrix4d::Identity() - s * s.transpose();
  return proj * a / n;
}

CriticalKind tangent_configuration(const Curve& c, const ParamTriple& p, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  std::array<Point, 3> pt{}, dir{};
  for (int k = 0; k < 3; ++k) {
    pt[k] = c.value(p[k]);
    dir[k] = c.derivative(p[k]);
    const double len = std::abs(dir[k]);
    if (!(len > 0.0)) throw InvalidParameter("curve derivative vanishes");
    dir[k] /= len;
  }

  if (std::abs(cross(dir[0], dir[1])) <= tol && std::abs(cross(dir[1], dir[2])) <= tol &&
      std::abs(cross(dir[0], dir[2])) <= tol) {
    return CriticalKind::parallel;
  }

  // Homogeneous lines in coordinates centered at the centroid and scaled by the
  // diameter, so the determinant is translation and scale free.
  const Point g = (pt[0] + pt[1] + pt[2]) / 3.0;
  const double diam =
      std::max({std::abs(pt[1] - pt[0]), std::abs(pt[2] - pt[0]), std::abs(pt[2] - pt[1])});
  const double scale = diam > 0.0 ? diam : 1.0;
  Eigen::Matrix3d lines;
  for (int k = 0; k < 3; ++k) {
    const Point q = (pt[k] - g) / scale;
    const Point normal(-dir[k].imag(), dir[k].real());
    lines.row(k) << normal.real(), normal.imag(), -(normal.real() * q.real() + normal.imag() * q.imag());
  }
  if (std::abs(lines.determinant()) <= tol) return CriticalKind::concurrent;
  return CriticalKind::regular;
}

CriticalReport is_critical(const Curve& c, const ParamTriple& p, double tol,
                           double geometric_tol) {
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  if (geometric_tol == 0.0) geometric_tol = tol;
  if (!(geometric_tol > 0.0)) throw InvalidParameter("tolerance must be positive");

  CriticalReport rep;
  const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(jacobian_F(c, p));
  rep.sigma_min = svd.singularValues()(2);
  rep.critical = rep.sigma_min <= tol;
  rep.diagnostic = tangent_configuration(c, p, geometric_tol);
  return rep;
}

Shape boundary_shape(const Curve& c, const BoundaryDatum& b) {
  if (!c.is_c1()) throw NotC1("boundary extension needs a C1 curve");
  if (std::abs(b.u * b.u + b.v * b.v - 0.25) > 1e-12) {
    throw InvalidParameter("boundary datum must lie on the circle of radius 1/2");
  }
  const Point d = c.derivative(b.t);
  return Shape::from_pair(b.u * d, b.v * d);
}

std::string to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::regular: return "regular";
    case CriticalKind::parallel: return "parallel";
    case CriticalKind::concurrent: return "concurrent";
  }
  return "unknown";
}

}  // namespace inscribe
