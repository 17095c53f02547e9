#include "inscribe/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "inscribe/errors.hpp"

namespace inscribe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orient(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

// Proper crossing of two closed segments that share no endpoint index.
bool segments_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

Curve::Curve(std::string name, Evaluator value, Evaluator derivative, Smoothness smoothness)
    : name_(std::move(name)),
      value_(std::move(value)),
      derivative_(std::move(derivative)),
      smoothness_(smoothness) {
  if (!value_ || !derivative_) throw InvalidParameter("curve evaluators must be callable");
}

double Curve::wrap(double t) {
  double w = t - std::floor(t);
  if (w >= 1.0) w = 0.0;  // t slightly below an integer can round up
  return w;
}

CurveValidationReport validate(const Curve& c, int n_samples) {
  if (n_samples < 16) throw InvalidParameter("validation needs at least 16 samples");

  CurveValidationReport rep;
  rep.samples_used = n_samples;
  const auto n = static_cast<std::size_t>(n_samples);

  std::vector<Point> pts(n);
  rep.min_speed = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n_samples;
    pts[i] = c.value(t);
    rep.min_speed = std::min(rep.min_speed, std::abs(c.derivative(t)));
  }

  rep.min_separation_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const std::size_t gap = std::min(j - i, n - (j - i));
      if (gap < 2) continue;
      const double dist = static_cast<double>(gap) / n_samples;
      rep.min_separation_ratio = std::min(rep.min_separation_ratio, std::abs(pts[i] - pts[j]) / dist);
    }
  }

  // A crossing of the sampled polygon means the chord ratio reaches 0 between samples.
  bool crosses = false;
  for (std::size_t i = 0; i < n && !crosses; ++i) {
    const Point a = pts[i], b = pts[(i + 1) % n];
    for (std::size_t j = i + 2; j < n; ++j) {
      if ((j + 1) % n == i) continue;
      if (segments_cross(a, b, pts[j], pts[(j + 1) % n])) {
        crosses = true;
        break;
      }
    }
  }
  if (crosses) rep.min_separation_ratio = 0.0;

  const Point d0 = c.derivative(0.0);
  const Point d1 = c.derivative(1.0 - 1e-9);
  rep.derivative_seam_jump = std::abs(d0 - d1) / std::max(std::abs(d0), 1e-300);
  rep.derivative_periodic = rep.derivative_seam_jump <= 1e-4;

  rep.is_embedded_numerically = rep.min_speed > 0.0 && rep.min_separation_ratio > 0.0;
  return rep;
}

Curve make_circle() {
  return Curve(
      "circle", [](double t) { return std::polar(1.0, kTwoPi * t); },
      [](double t) { return Point(0.0, kTwoPi) * std::polar(1.0, kTwoPi * t); });
}

Curve make_ellipse(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidParameter("ellipse semi-axes must be positive");
  std::ostringstream name;
  name << "ellipse(" << a << "," << b << ")";
  return Curve(
      name.str(),
      [a, b](double t) { return Point(a * std::cos(kTwoPi * t), b * std::sin(kTwoPi * t)); },
      [a, b](double t) {
        return kTwoPi * Point(-a * std::sin(kTwoPi * t), b * std::cos(kTwoPi * t));
      });
}

Curve make_star(double eps, int k) {
  if (!(std::abs(eps) < 1.0)) throw InvalidParameter("star amplitude must satisfy |eps| < 1");
  if (k < 2) throw InvalidParameter("star needs k >= 2");
  std::ostringstream name;
  name << "star(" << eps << "," << k << ")";
  Curve c(
      name.str(),
      [eps, k](double t) {
        const double th = kTwoPi * t;
        return (1.0 + eps * std::cos(k * th)) * std::polar(1.0, th);
      },
      [eps, k](double t) {
        const double th = kTwoPi * t;
        const double r = 1.0 + eps * std::cos(k * th);
        const double dr = -eps * k * std::sin(k * th);
        return kTwoPi * Point(dr, r) * std::polar(1.0, th);
      });
  if (!validate(c, std::max(256, 32 * k)).is_embedded_numerically) {
    throw EmbeddingFailure("star curve is not embedded");
  }
  return c;
}

Curve make_half_lemniscate() {
  static constexpr double quarter = std::numbers::pi / 4.0;
  static constexpr double sweep = std::numbers::pi / 2.0;
  return Curve(
      "lemniscate",
      [](double t) {
        const double th = -quarter + t * sweep;
        return std::cos(2.0 * th) * std::polar(1.0, th);
      },
      [](double t) {
        const double th = -quarter + t * sweep;
        return sweep * Point(-2.0 * std::sin(2.0 * th), std::cos(2.0 * th)) * std::polar(1.0, th);
      },
      Smoothness::non_c1);
}

Curve blend(const Curve& a, const Curve& b, double s) {
  std::ostringstream name;
  name << "blend(" << a.name() << "," << b.name() << "," << s << ")";
  const Smoothness sm = (a.is_c1() && b.is_c1()) ? Smoothness::c1 : Smoothness::non_c1;
  return Curve(
      name.str(), [a, b, s](double t) { return (1.0 - s) * a.value(t) + s * b.value(t); },
      [a, b, s](double t) { return (1.0 - s) * a.derivative(t) + s * b.derivative(t); }, sm);
}

std::vector<Point> read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open point file: " + path);
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double x = 0.0, y = 0.0;
    if (!(ls >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("expected 'x y' in " + path + " line " + std::to_string(lineno), lineno);
    }
    std::string rest;
    if (!(ls >> y) || (ls >> rest)) {
      throw ParseError("expected 'x y' in " + path + " line " + std::to_string(lineno), lineno);
    }
    pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace inscribe
