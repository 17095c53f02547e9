#pragma once

#include <vector>

#include <Eigen/Core>

namespace inscribe {

// n-simplex in R^n modulo translation and positive homothety: the edge vectors
// w_i = z_i - z_0 as columns, scaled to unit Frobenius norm.
class SimplexShape {
 public:
  int dimension() const { return static_cast<int>(edges_.cols()); }
  // n x n, column i-1 holds w_i.
  const Eigen::MatrixXd& edges() const { return edges_; }

  // Throws DegenerateInput on the zero matrix, InvalidParameter on a non-square input.
  static SimplexShape from_edges(const Eigen::MatrixXd& edges);

 private:
  explicit SimplexShape(Eigen::MatrixXd e) : edges_(std::move(e)) {}
  Eigen::MatrixXd edges_;
};

// Takes n + 1 vertices of R^n (n >= 2).
SimplexShape simplex_shape(const std::vector<Eigen::VectorXd>& vertices);

// det(w_1, ..., w_n): zero exactly on flat simplices, sign gives orientation.
double flatness(const SimplexShape& s);

// Places a non-flat simplex on the unit sphere S^{n-1}: returns (z_i - O) / R for
// the circumcenter O and circumradius R. Throws FlatTarget when flat.
std::vector<Eigen::VectorXd> sphere_oracle(const std::vector<Eigen::VectorXd>& target);

double shape_distance(const SimplexShape& a, const SimplexShape& b);

}  // namespace inscribe
