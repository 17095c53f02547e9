#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "inscribe/solver.hpp"

namespace inscribe {

namespace {

// Largest parameter move a corrected step may make before it is treated as a
// jump to another branch.
constexpr double kMaxJump = 0.1;
constexpr int kMaxHalvings = 10;

double signed_delta(double to, double from) { return Curve::wrap(to - from + 0.5) - 0.5; }

double sigma_min_at(const Curve& c, const ParamTriple& p) {
  const Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(jacobian_F(c, p));
  return svd.singularValues()(2);
}

}  // namespace

Solution continue_solution(const CurveFamily& family, const Shape& target, const Solution& start,
                           int steps, const SolverConfig& cfg) {
  cfg.check();
  if (steps < 1) throw InvalidParameter("continuation needs at least one step");

  const Curve first = family(0.0);
  if (!(shape_distance(F(first, start.p), target) <= cfg.residual_accept)) {
    throw InvalidParameter("continuation start is not a solution at s = 0");
  }
  const double sigma_start = sigma_min_at(first, start.p);

  const double nominal = 1.0 / steps;
  const double smallest = nominal / static_cast<double>(1 << kMaxHalvings);
  double h = nominal;
  double s = 0.0;
  ParamTriple p = start.p;
  ParamTriple prev_p = p;
  double prev_s = -1.0;
  int total_iters = 0;

  while (s < 1.0) {
    double s_next = s + h;
    if (s_next > 1.0 - 1e-12) s_next = 1.0;

    ParamTriple guess = p;
    if (prev_s >= 0.0) {
      const double ratio = (s_next - s) / (s - prev_s);
      for (int k = 0; k < 3; ++k) guess[k] = p[k] + ratio * signed_delta(p[k], prev_p[k]);
      guess = guess.wrapped();
    }

    const Curve cs = family(s_next);
    const RefineResult rr = refine(cs, target, guess, cfg);
    const bool converged = rr.residual <= cfg.residual_accept && triple_distance(rr.p, p) <= kMaxJump;

    if (converged) {
      const double sigma = sigma_min_at(cs, rr.p);
      if (sigma <= cfg.critical_tol) {
        std::ostringstream msg;
        msg << "continuation reached a critical configuration at s = " << s_next;
        throw PathFailure(msg.str(), s_next, PathFailureKind::critical, sigma);
      }
      prev_p = p;
      prev_s = s;
      p = rr.p;
      s = s_next;
      total_iters += rr.iterations;
      h = std::min(nominal, 2.0 * h);
      continue;
    }

    h *= 0.5;
    if (h < smallest) {
      // A fold shows up as a collapsing sigma_min just before the stall.
      const double sigma = sigma_min_at(family(s), p);
      const PathFailureKind kind =
          sigma <= 1e-2 * sigma_start ? PathFailureKind::critical : PathFailureKind::divergence;
      std::ostringstream msg;
      msg << "continuation stalled at s = " << s_next << " (" << to_string(kind) << ")";
      throw PathFailure(msg.str(), s_next, kind, sigma);
    }
  }

  const Curve last = family(1.0);
  Solution out;
  out.p = p;
  out.vertices = inscribed_triangle(last, p);
  out.residual = shape_distance(F(last, p), target);
  out.sigma_min = sigma_min_at(last, p);
  out.regular = out.sigma_min > cfg.critical_tol;
  out.newton_iters = total_iters;
  return out;
}

}  // namespace inscribe
