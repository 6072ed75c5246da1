#pragma once

// Solvers for the convex 1-center problem
//
//   min_x f_1(x) = max_i rho_F(x - a_i).
//
// The optimal set is a nonempty compact convex subset of B_F[a_i, rho] for
// every i, with rho = max_j rho_F(a_i - a_j). Solvers return one minimizer.

#include "kcenter/gauge.hpp"

#include <span>
#include <string_view>

namespace kcenter {

enum class OneCenterMethod {
  Analytic1d,
  AnalyticBox,
  EuclideanExact,
  EuclideanIterative,
  Subgradient,
  GridOracle,
};

std::string_view to_string(OneCenterMethod method);

struct OneCenterResult {
  Vector center;
  double radius = 0.0;
  OneCenterMethod method = OneCenterMethod::Subgradient;
  /// Additive bound on radius - optimal radius.
  double accuracy = 0.0;
  bool converged = true;
  long iterations = 0;
};

inline constexpr double kDefaultOneCenterEps = 1e-6;

/// Closed form on the line: with alpha = min, beta = max of the points and
/// F = [a, b], center = (b beta - a alpha)/(b - a), radius = (beta - alpha)/(b - a).
/// Both rho(center - alpha) and rho(center - beta) equal the radius.
OneCenterResult one_center_1d(const shape::Interval& unit, std::span<const double> points);

/// Same, for any gauge in dimension 1 (throws WrongDimension otherwise).
OneCenterResult one_center_1d(const Gauge& gauge, std::span<const Vector> points);

/// Exact minimum enclosing Euclidean ball by move-to-front Welzl recursion
/// over support sets of at most d + 1 points.
OneCenterResult min_enclosing_ball(std::span<const Vector> points);

/// Core-set iteration: start at the centroid and step 1/(t+1) toward the
/// farthest point. Runs min(ceil(1/eps^2), max_iterations) steps; accuracy is
/// radius / sqrt(steps), the guarantee of the iteration.
OneCenterResult one_center_coreset(std::span<const Vector> points, double eps,
                                   long max_iterations = 1'000'000);

/// Euclidean 1-center: closed form in d = 1, exact Welzl otherwise.
OneCenterResult one_center_euclidean(std::span<const Vector> points,
                                     double eps = kDefaultOneCenterEps);

/// Box and max-norm gauges separate by coordinate: the midpoint of the
/// per-axis range is optimal.
OneCenterResult one_center_box(const Gauge& gauge, std::span<const Vector> points);

struct SubgradientOptions {
  /// Replace the result with a closed-form solver when the gauge allows it.
  bool refine = true;
  /// Per-start budget; 0 means 50 * ceil(1/eps).
  long max_iterations = 0;
  /// Non-improving steps before the target gap is halved.
  int stall_limit = 0;
};

/// Polyak-type subgradient method with an adaptive target level
/// f_best - delta: delta is halved whenever the target is not reached within
/// the stall limit, and a start finishes once delta < eps / 4. Starts from
/// every demand point and from the centroid; the best start (ties to the
/// lower start index) wins. converged = false means some start ran out of
/// budget, and accuracy then holds the remaining target gap.
OneCenterResult one_center_general(const Gauge& gauge, std::span<const Vector> points,
                                   double eps = kDefaultOneCenterEps,
                                   const SubgradientOptions& options = {});

/// Brute force for tests: evaluates f_1 on a uniform grid over the Euclidean
/// box around B_F[a_1, rho], then twice more on finer grids around the best
/// node. accuracy = ||F°|| * (half the coarse cell diagonal), which bounds the
/// gap to the optimum for any Lipschitz objective. d <= 2 only.
OneCenterResult one_center_grid_oracle(const Gauge& gauge, std::span<const Vector> points,
                                       int resolution);

/// Picks the strongest solver the gauge admits: 1d closed form, box
/// separation, exact Euclidean ball, then the subgradient method.
OneCenterResult solve_one_center(const Gauge& gauge, std::span<const Vector> points,
                                 double eps = kDefaultOneCenterEps);

/// max_i rho_F(center - a_i)
double covering_radius(const Gauge& gauge, const Vector& center, std::span<const Vector> points);

}  // namespace kcenter
