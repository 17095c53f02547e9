#pragma once

#include <functional>
#include <string>
#include <vector>

#include "inscribe/curves.hpp"
#include "inscribe/errors.hpp"
#include "inscribe/shape_space.hpp"
#include "inscribe/triangle_map.hpp"

namespace inscribe {

struct SolverConfig {
  int grid_n = 64;                // lattice points per axis
  double diag_exclusion = 1e-3;   // minimum pairwise parameter distance scanned
  double newton_tol = 1e-12;      // Gauss-Newton stops once the shape distance is below this
  int newton_max_iter = 50;
  double dedup_tol = 1e-4;        // max-coordinate torus distance merging solutions
  double residual_accept = 1e-8;  // shape distance accepted as an inscription
  double critical_tol = 1e-8;     // sigma_min threshold for the regularity flag
  int max_candidates = 200;
  int validation_samples = 256;

  // Throws ConfigError on violated invariants.
  void check() const;
};

struct Solution {
  ParamTriple p;
  double residual = 0.0;  // shape_distance(F(c, p), target)
  Triangle vertices;      // (c(t0), c(t1), c(t2))
  bool regular = true;
  double sigma_min = 0.0;
  int newton_iters = 0;
};

enum class SolveStatus { found, not_found, degenerate_target };

struct SolveReport {
  Shape target = Shape::from_pair(1.0, 0.0);
  std::string curve_name;
  std::vector<Solution> solutions;  // accepted, de-duplicated, ordered by (residual, p)
  int scan_minima_examined = 0;
  double min_scan_residual = 0.0;   // smallest shape distance over the lattice
  double min_residual = 0.0;        // smallest shape distance after refinement
  int grid_n = 0;
  SolveStatus status = SolveStatus::not_found;
};

// One Gauss-Newton run on |F(c, p) - target|^2 from `start`.
struct RefineResult {
  ParamTriple p;
  double residual = 0.0;
  int iterations = 0;
  // Shape distance before each iteration and after the last one.
  std::vector<double> history;
};

RefineResult refine(const Curve& c, const Shape& target, const ParamTriple& start,
                    const SolverConfig& cfg);

// The unique triple on the unit circle inscribing `target` up to translation and
// positive homothety. Throws FlatTarget for flat targets.
ParamTriple circle_oracle(const Triangle& target);

// Scans the lattice off the diagonal, refines local minima and returns every
// accepted inscription. Throws EmbeddingFailure when `c` fails validation.
SolveReport solve(const Curve& c, const Shape& target, const SolverConfig& cfg = {});

// Curve family s -> c_s on s in [0, 1].
using CurveFamily = std::function<Curve(double)>;

enum class PathFailureKind { critical, divergence };

class PathFailure : public Error {
 public:
  PathFailure(const std::string& what, double s, PathFailureKind kind, double sigma_min)
      : Error(what), s_(s), kind_(kind), sigma_min_(sigma_min) {}
  double s() const noexcept { return s_; }
  PathFailureKind kind() const noexcept { return kind_; }
  double sigma_min() const noexcept { return sigma_min_; }

 private:
  double s_;
  PathFailureKind kind_;
  double sigma_min_;
};

// Tracks `start` (a solution on family(0)) to s = 1 in `steps` uniform steps with
// secant prediction and Gauss-Newton correction; halves the step on failure, at
// most 10 times. Throws PathFailure on a near-critical Jacobian or a stalled step.
Solution continue_solution(const CurveFamily& family, const Shape& target, const Solution& start,
                           int steps, const SolverConfig& cfg = {});

std::string to_string(SolveStatus s);
std::string to_string(PathFailureKind k);

}  // namespace inscribe
