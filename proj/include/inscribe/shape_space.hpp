#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace inscribe {

// Plane points are complex numbers throughout.
using Point = std::complex<double>;

// Ordered triple of plane points. Not all three may coincide when a shape is taken.
struct Triangle {
  Point z0;
  Point z1;
  Point z2;

  Point operator[](int k) const { return k == 0 ? z0 : (k == 1 ? z1 : z2); }
};

class HopfCoord;

// Class of a triangle modulo translation and positive homothety, stored as the
// unique unit-norm representative (w1, w2) of the ray through (z1 - z0, z2 - z0).
class Shape {
 public:
  // Normalizes (w1, w2) onto the unit sphere. Throws DegenerateInput on (0, 0).
  static Shape from_pair(Point w1, Point w2);
  static Shape from_vector(const Eigen::Vector4d& v);

  // A representative whose Hopf image is `h`: (z, 1) normalized, or (1, 0) for infinity.
  static Shape from_hopf(const HopfCoord& h);

  Point w1() const { return w1_; }
  Point w2() const { return w2_; }

  // (re w1, im w1, re w2, im w2)
  Eigen::Vector4d as_vector() const;

  // Determinant of (w1, w2) read as two real column vectors. Positive for
  // counter-clockwise (z0, z1, z2).
  double det() const;

  // The mirror image (complex conjugate) shape; lies on the other side of the flat torus.
  Shape conjugate() const;

 private:
  Shape(Point w1, Point w2) : w1_(w1), w2_(w2) {}
  Point w1_;
  Point w2_;
};

// Point of the Riemann sphere: a finite complex value or infinity.
class HopfCoord {
 public:
  static HopfCoord finite(Point z) { return HopfCoord(z); }
  static HopfCoord infinity() { return HopfCoord(); }

  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: !is_infinite().
  Point value() const { return *value_; }

 private:
  HopfCoord() = default;
  explicit HopfCoord(Point z) : value_(z) {}
  std::optional<Point> value_;
};

// |w2| at or below this maps to infinity.
inline constexpr double kHopfInfinityThreshold = 1e-14;

Shape shape_of(const Triangle& t);

HopfCoord hopf(const Shape& s);

// Rotation-quotient loci a shape can sit on. Several can hold at once.
enum class Locus : std::uint8_t {
  flat = 1u << 0,
  equilateral = 1u << 1,
  isosceles = 1u << 2,
  right = 1u << 3,
  scalene = 1u << 4,
};

struct ShapeClass {
  std::uint8_t loci = 0;
  // +1 counter-clockwise, -1 clockwise, 0 flat.
  int orientation = 0;
  double tol = 0.0;

  bool has(Locus l) const { return (loci & static_cast<std::uint8_t>(l)) != 0; }
  // Names of the matching loci in a fixed order: flat, equilateral, isosceles, right, scalene.
  std::vector<std::string> names() const;
};

// Throws InvalidParameter when tol <= 0.
ShapeClass classify(const Shape& s, double tol);

// Euclidean distance in R^4 between unit representatives.
double shape_distance(const Shape& a, const Shape& b);

std::string to_string(Locus l);

}  // namespace inscribe
