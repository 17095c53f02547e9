#include "inscribe/shape_space.hpp"

#include <cmath>
#include <numbers>

#include "inscribe/errors.hpp"

namespace inscribe {

Shape Shape::from_pair(Point w1, Point w2) {
  const double n = std::sqrt(std::norm(w1) + std::norm(w2));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateInput("triangle collapses to a single point");
  }
  return Shape(w1 / n, w2 / n);
}

Shape Shape::from_vector(const Eigen::Vector4d& v) {
  return from_pair({v[0], v[1]}, {v[2], v[3]});
}

Shape Shape::from_hopf(const HopfCoord& h) {
  if (h.is_infinite()) return Shape(1.0, 0.0);
  return from_pair(h.value(), 1.0);
}

Eigen::Vector4d Shape::as_vector() const {
  return {w1_.real(), w1_.imag(), w2_.real(), w2_.imag()};
}

double Shape::det() const { return w1_.real() * w2_.imag() - w1_.imag() * w2_.real(); }

Shape Shape::conjugate() const { return Shape(std::conj(w1_), std::conj(w2_)); }

Shape shape_of(const Triangle& t) {
  if (t.z0 == t.z1 && t.z1 == t.z2) {
    throw DegenerateInput("triangle has three equal vertices");
  }
  return Shape::from_pair(t.z1 - t.z0, t.z2 - t.z0);
}

HopfCoord hopf(const Shape& s) {
  if (std::abs(s.w2()) <= kHopfInfinityThreshold) return HopfCoord::infinity();
  // Complex division does not return exactly 1 for z / z.
  if (s.w1() == s.w2()) return HopfCoord::finite(1.0);
  return HopfCoord::finite(s.w1() / s.w2());
}

namespace {

constexpr auto bit(Locus l) { return static_cast<std::uint8_t>(l); }

double circle_gap(Point z, Point center, double radius) {
  return std::abs(std::abs(z - center) - radius);
}

}  // namespace

ShapeClass classify(const Shape& s, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("classification tolerance must be positive");

  ShapeClass out;
  out.tol = tol;
  const HopfCoord h = hopf(s);
  const double d = s.det();

  // |Im z| = |det| / |w2|^2 >= |det|, so the det test subsumes the Im z test;
  // both are kept so the flat tag and the orientation stay in lockstep.
  const bool flat = h.is_infinite() || std::abs(h.value().imag()) <= tol || std::abs(d) <= tol;
  if (flat) out.loci |= bit(Locus::flat);
  out.orientation = flat ? 0 : (d > 0.0 ? 1 : -1);

  if (h.is_infinite()) {
    // Infinity lies on every vertical line of both families.
    out.loci |= bit(Locus::isosceles) | bit(Locus::right);
    return out;
  }

  const Point z = h.value();
  const Point e60 = std::polar(1.0, std::numbers::pi / 3.0);
  if (std::abs(z - e60) <= tol || std::abs(z - std::conj(e60)) <= tol) {
    out.loci |= bit(Locus::equilateral);
  }
  if (circle_gap(z, 0.0, 1.0) <= tol || circle_gap(z, 1.0, 1.0) <= tol ||
      std::abs(z.real() - 0.5) <= tol) {
    out.loci |= bit(Locus::isosceles);
  }
  if (circle_gap(z, 0.5, 0.5) <= tol || std::abs(z.real()) <= tol ||
      std::abs(z.real() - 1.0) <= tol) {
    out.loci |= bit(Locus::right);
  }
  if (out.loci == 0) out.loci = bit(Locus::scalene);
  return out;
}

double shape_distance(const Shape& a, const Shape& b) {
  return (a.as_vector() - b.as_vector()).norm();
}

std::string to_string(Locus l) {
  switch (l) {
    case Locus::flat: return "flat";
    case Locus::equilateral: return "equilateral";
    case Locus::isosceles: return "isosceles";
    case Locus::right: return "right";
    case Locus::scalene: return "scalene";
  }
  return "unknown";
}

std::vector<std::string> ShapeClass::names() const {
  std::vector<std::string> out;
  for (Locus l : {Locus::flat, Locus::equilateral, Locus::isosceles, Locus::right, Locus::scalene}) {
    if (has(l)) out.push_back(to_string(l));
  }
  return out;
}

}  // namespace inscribe
