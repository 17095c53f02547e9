#include "inscribe/simplex_nd.hpp"

#include <cmath>

#include <Eigen/LU>

#include "inscribe/errors.hpp"

namespace inscribe {

namespace {

constexpr double kFlatDet = 1e-12;

void check_vertices(const std::vector<Eigen::VectorXd>& v) {
  if (v.size() < 3) throw InvalidParameter("simplex needs n + 1 >= 3 vertices");
  const auto n = static_cast<Eigen::Index>(v.size() - 1);
  for (const auto& z : v) {
    if (z.size() != n) throw InvalidParameter("simplex vertices must lie in R^n with n + 1 vertices");
  }
}

}  // namespace

SimplexShape SimplexShape::from_edges(const Eigen::MatrixXd& edges) {
  if (edges.rows() != edges.cols() || edges.rows() < 2) {
    throw InvalidParameter("simplex edge matrix must be n x n with n >= 2");
  }
  const double norm = edges.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DegenerateInput("simplex collapses to a point");
  return SimplexShape(edges / norm);
}

SimplexShape simplex_shape(const std::vector<Eigen::VectorXd>& vertices) {
  check_vertices(vertices);
  const auto n = static_cast<Eigen::Index>(vertices.size() - 1);
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) e.col(i) = vertices[static_cast<std::size_t>(i + 1)] - vertices[0];
  return SimplexShape::from_edges(e);
}

double flatness(const SimplexShape& s) { return s.edges().determinant(); }

std::vector<Eigen::VectorXd> sphere_oracle(const std::vector<Eigen::VectorXd>& target) {
  const SimplexShape shape = simplex_shape(target);
  if (std::abs(flatness(shape)) <= kFlatDet) throw FlatTarget("sphere oracle needs a non-flat simplex");

  // |z_i - O|^2 = |z_0 - O|^2  <=>  2 (z_i - z_0) . O = |z_i|^2 - |z_0|^2
  const auto n = static_cast<Eigen::Index>(target.size() - 1);
  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& zi = target[static_cast<std::size_t>(i + 1)];
    a.row(i) = 2.0 * (zi - target[0]).transpose();
    b(i) = zi.squaredNorm() - target[0].squaredNorm();
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd center = lu.solve(b);
  if (!center.allFinite()) throw FlatTarget("circumcenter system is singular");
  const double radius = (target[0] - center).norm();

  std::vector<Eigen::VectorXd> out;
  out.reserve(target.size());
  for (const auto& z : target) out.push_back((z - center) / radius);
  return out;
}

double shape_distance(const SimplexShape& a, const SimplexShape& b) {
  if (a.dimension() != b.dimension()) throw InvalidParameter("simplex dimensions differ");
  return (a.edges() - b.edges()).norm();
}

}  // namespace inscribe
