#include "inscribe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

namespace inscribe {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// |det| of a unit shape at or below this counts as flat for existence claims.
constexpr double kFlatDet = 1e-12;

double distance_sq(Point z0, Point z1, Point z2, const Eigen::Vector4d& target) {
  const Point a = z1 - z0, b = z2 - z0;
  // Same cut as F's diagonal test, so a finite value means F is defined.
  if (!(std::max(std::norm(a), std::norm(b)) > 1e-28)) return kInf;
  const double n2 = std::norm(a) + std::norm(b);
  const double inv = 1.0 / std::sqrt(n2);
  const double d0 = a.real() * inv - target[0];
  const double d1 = a.imag() * inv - target[1];
  const double d2 = b.real() * inv - target[2];
  const double d3 = b.imag() * inv - target[3];
  return d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3;
}

double distance_at(const Curve& c, const ParamTriple& p, const Eigen::Vector4d& target) {
  return std::sqrt(distance_sq(c.value(p[0]), c.value(p[1]), c.value(p[2]), target));
}

bool lex_less(const ParamTriple& a, const ParamTriple& b) { return a.t < b.t; }

}  // namespace

void SolverConfig::check() const {
  if (grid_n < 8) throw ConfigError("grid_n must be at least 8");
  if (!(diag_exclusion > 0.0) || !(newton_tol > 0.0) || !(dedup_tol > 0.0) ||
      !(residual_accept > 0.0) || !(critical_tol > 0.0)) {
    throw ConfigError("solver tolerances must be positive");
  }
  if (newton_max_iter < 1) throw ConfigError("newton_max_iter must be positive");
  if (max_candidates < 1) throw ConfigError("max_candidates must be positive");
  if (validation_samples < 16) throw ConfigError("validation_samples must be at least 16");
}

RefineResult refine(const Curve& c, const Shape& target, const ParamTriple& start,
                    const SolverConfig& cfg) {
  const Eigen::Vector4d tv = target.as_vector();
  RefineResult out;
  out.p = start.wrapped();
  out.residual = distance_at(c, out.p, tv);
  out.history.push_back(out.residual);

  for (int it = 0; it < cfg.newton_max_iter && out.residual > cfg.newton_tol; ++it) {
    if (!std::isfinite(out.residual)) break;
    const Eigen::Matrix<double, 4, 3> J = jacobian_F(c, out.p);
    const Eigen::Vector4d r = F(c, out.p).as_vector() - tv;

    Eigen::Matrix3d normal = J.transpose() * J;
    const Eigen::Vector3d g = J.transpose() * r;
    // Tiny Levenberg term keeps the system solvable at critical points without
    // disturbing the quadratic tail elsewhere.
    normal.diagonal().array() += 1e-14 * std::max(normal.trace(), 1e-300);
    Eigen::Vector3d step = -normal.ldlt().solve(g);
    if (!step.allFinite()) break;
    const double longest = step.cwiseAbs().maxCoeff();
    if (longest > 0.1) step *= 0.1 / longest;

    bool moved = false;
    double alpha = 1.0;
    for (int ls = 0; ls < 30; ++ls, alpha *= 0.5) {
      ParamTriple trial{{out.p[0] + alpha * step[0], out.p[1] + alpha * step[1],
                         out.p[2] + alpha * step[2]}};
      trial = trial.wrapped();
      const double d = distance_at(c, trial, tv);
      if (d < out.residual) {
        out.p = trial;
        out.residual = d;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    ++out.iterations;
    out.history.push_back(out.residual);
  }
  return out;
}

ParamTriple circle_oracle(const Triangle& target) {
  const Shape s = shape_of(target);
  if (std::abs(s.det()) <= kFlatDet) throw FlatTarget("circle oracle needs a non-flat triangle");

  const Point a = target.z1 - target.z0;
  const Point b = target.z2 - target.z0;
  const Point center = target.z0 + (std::norm(a) * b - std::norm(b) * a) /
                                       (std::conj(a) * b - a * std::conj(b));
  ParamTriple p;
  for (int k = 0; k < 3; ++k) {
    p[k] = Curve::wrap(std::arg(target[k] - center) / (2.0 * std::numbers::pi));
  }
  return p;
}

SolveReport solve(const Curve& c, const Shape& target, const SolverConfig& cfg) {
  cfg.check();
  if (!validate(c, cfg.validation_samples).is_embedded_numerically) {
    throw EmbeddingFailure("curve '" + c.name() + "' failed embeddedness validation");
  }

  SolveReport rep;
  rep.target = target;
  rep.curve_name = c.name();
  rep.grid_n = cfg.grid_n;

  const int n = cfg.grid_n;
  const auto nz = static_cast<std::size_t>(n);
  const Eigen::Vector4d tv = target.as_vector();

  std::vector<Point> pts(nz);
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = c.value(static_cast<double>(i) / n);

  auto gap_ok = [&](int i, int j) {
    const int g = std::abs(i - j);
    return static_cast<double>(std::min(g, n - g)) / n >= cfg.diag_exclusion;
  };
  auto index = [nz](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * nz + static_cast<std::size_t>(j)) * nz +
           static_cast<std::size_t>(k);
  };

  // Lattice scan; excluded points stay at +inf.
  std::vector<double> grid(nz * nz * nz, kInf);
  double best = kInf;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!gap_ok(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (!gap_ok(i, k) || !gap_ok(j, k)) continue;
        const double d = distance_sq(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)],
                                     pts[static_cast<std::size_t>(k)], tv);
        grid[index(i, j, k)] = d;
        best = std::min(best, d);
      }
    }
  }
  rep.min_scan_residual = std::sqrt(best);

  // Local minima over the 26-neighborhood (periodic).
  struct Candidate {
    double value;
    std::size_t idx;
    int i, j, k;
  };
  std::vector<Candidate> cands;
  auto wrap_i = [n](int i) { return (i % n + n) % n; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double v = grid[index(i, j, k)];
        if (!std::isfinite(v)) continue;
        bool minimum = true;
        for (int di = -1; di <= 1 && minimum; ++di) {
          for (int dj = -1; dj <= 1 && minimum; ++dj) {
            for (int dk = -1; dk <= 1; ++dk) {
              if (di == 0 && dj == 0 && dk == 0) continue;
              if (grid[index(wrap_i(i + di), wrap_i(j + dj), wrap_i(k + dk))] < v) {
                minimum = false;
                break;
              }
            }
          }
        }
        if (minimum) cands.push_back({v, index(i, j, k), i, j, k});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.value != b.value ? a.value < b.value : a.idx < b.idx;
  });
  if (cands.size() > static_cast<std::size_t>(cfg.max_candidates)) {
    cands.resize(static_cast<std::size_t>(cfg.max_candidates));
  }
  rep.scan_minima_examined = static_cast<int>(cands.size());

  std::vector<Solution> accepted;
  double min_residual = rep.min_scan_residual;
  for (const Candidate& cand : cands) {
    const ParamTriple start{{static_cast<double>(cand.i) / n, static_cast<double>(cand.j) / n,
                             static_cast<double>(cand.k) / n}};
    const RefineResult rr = refine(c, target, start, cfg);
    min_residual = std::min(min_residual, rr.residual);
    if (!(rr.residual <= cfg.residual_accept)) continue;

    Solution sol;
    sol.p = rr.p;
    sol.vertices = inscribed_triangle(c, sol.p);
    sol.residual = shape_distance(F(c, sol.p), target);
    sol.newton_iters = rr.iterations;
    const CriticalReport crit = is_critical(c, sol.p, cfg.critical_tol);
    sol.regular = !crit.critical;
    sol.sigma_min = crit.sigma_min;
    accepted.push_back(sol);
  }
  rep.min_residual = min_residual;

  std::sort(accepted.begin(), accepted.end(), [](const Solution& a, const Solution& b) {
    return a.residual != b.residual ? a.residual < b.residual : lex_less(a.p, b.p);
  });
  for (const Solution& s : accepted) {
    const bool dup = std::any_of(rep.solutions.begin(), rep.solutions.end(), [&](const Solution& kept) {
      return triple_distance(kept.p, s.p) <= cfg.dedup_tol;
    });
    if (!dup) rep.solutions.push_back(s);
  }

  if (!rep.solutions.empty()) {
    rep.status = SolveStatus::found;
  } else if (std::abs(target.det()) <= kFlatDet) {
    rep.status = SolveStatus::degenerate_target;
  } else {
    rep.status = SolveStatus::not_found;
  }
  return rep;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::not_found: return "not_found";
    case SolveStatus::degenerate_target: return "degenerate_target";
  }
  return "unknown";
}

std::string to_string(PathFailureKind k) {
  switch (k) {
    case PathFailureKind::critical: return "critical";
    case PathFailureKind::divergence: return "divergence";
  }
  return "unknown";
}

}  // namespace inscribe
