#include "inscribe/degree.hpp"

#include <cmath>
#include <numbers>

#include "inscribe/errors.hpp"

namespace inscribe {

namespace {

constexpr int kMaxRetries = 5;
constexpr double kProbeStep = 1e-4;
constexpr double kFlatDet = 1e-12;

int sign(double x) { return (x > 0) - (x < 0); }

// Deterministic unit tangent direction at `s` on the 3-sphere; successive
// retries rotate through different seeds so a bad direction is not reused.
Eigen::Vector4d tangent_direction(const Shape& s, int attempt) {
  static const Eigen::Vector4d seeds[] = {
      {0.31, -0.72, 0.52, 0.33}, {-0.48, 0.17, 0.61, -0.61}, {0.66, 0.21, -0.29, 0.66},
      {0.12, 0.57, -0.74, -0.33}, {-0.54, -0.45, -0.28, 0.65}, {0.71, -0.35, 0.35, -0.50}};
  const Eigen::Vector4d x = s.as_vector();
  Eigen::Vector4d d = seeds[attempt % 6];
  d -= d.dot(x) * x;
  return d.normalized();
}

Shape nudge(const Shape& s, int attempt, double size) {
  return Shape::from_vector(s.as_vector() + size * tangent_direction(s, attempt));
}

struct Count {
  int n = 0;
  bool regular = true;
};

Count count_preimages(const Curve& c, const Shape& probe, const SolverConfig& cfg) {
  const SolveReport rep = solve(c, probe, cfg);
  Count out;
  out.n = static_cast<int>(rep.solutions.size());
  for (const Solution& sol : rep.solutions) out.regular = out.regular && sol.regular;
  return out;
}

}  // namespace

Shape equilateral_shape(int orientation) {
  const double angle = orientation > 0 ? -std::numbers::pi / 3.0 : std::numbers::pi / 3.0;
  return Shape::from_hopf(HopfCoord::finite(std::polar(1.0, angle)));
}

LocalDegree local_degree(const Curve& c, const Shape& probe, const SolverConfig& cfg) {
  if (std::abs(probe.det()) <= kFlatDet) throw FlatTarget("local degree needs a non-flat probe");
  const int side = sign(probe.det());

  Shape current = probe;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
    const Count here = count_preimages(c, current, cfg);
    bool stable = false;
    if (here.regular) {
      const Count near = count_preimages(c, nudge(current, attempt, kProbeStep), cfg);
      stable = near.regular && near.n == here.n;
    }
    if (here.regular && stable) {
      LocalDegree out;
      out.count = here.n;
      out.degree = here.n % 2;
      out.probe = current;
      out.perturbations = attempt;
      out.all_regular = true;
      return out;
    }
    // Step further each time, staying on the probe's side of the flat torus.
    Shape next = nudge(probe, attempt + 1, kProbeStep * (attempt + 2));
    if (sign(next.det()) != side) next = nudge(probe, attempt + 2, kProbeStep);
    current = next;
  }
  throw RegularityFailure("probe kept hitting critical preimages on '" + c.name() + "'");
}

BidegreeReport bidegree(const Curve& c, const Shape& minus_probe, const Shape& plus_probe,
                        const SolverConfig& cfg) {
  if (!c.is_c1()) throw NotC1("bidegree needs a C1 curve");
  if (sign(minus_probe.det()) != -1 || sign(plus_probe.det()) != 1) {
    throw InvalidParameter("bidegree probes must have orientation -1 and +1");
  }
  const LocalDegree lo = local_degree(c, minus_probe, cfg);
  const LocalDegree hi = local_degree(c, plus_probe, cfg);

  BidegreeReport rep;
  rep.d_minus = lo.degree;
  rep.d_plus = hi.degree;
  rep.probes = {lo.probe, hi.probe};
  rep.preimage_counts = {lo.count, hi.count};
  rep.all_regular = lo.all_regular && hi.all_regular;
  rep.grid_n = cfg.grid_n;
  return rep;
}

BidegreeReport bidegree(const Curve& c, const SolverConfig& cfg) {
  return bidegree(c, equilateral_shape(-1), equilateral_shape(+1), cfg);
}

}  // namespace inscribe
