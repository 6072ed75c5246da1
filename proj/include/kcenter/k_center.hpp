#pragma once

#include "kcenter/instance.hpp"
#include "kcenter/one_center.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace kcenter {

enum class SolveMethod { ExactPartition, Alternating, MultiStart };

std::string_view to_string(SolveMethod method);

struct SolveReport {
  double value = 0.0;
  CenterConfiguration centers;
  SolveMethod method = SolveMethod::ExactPartition;
  /// Point blocks served by each center (exact: the optimal partition;
  /// heuristics: the final natural clustering).
  std::optional<std::vector<IndexSet>> partition;
  long iterations = 0;
  std::optional<std::uint64_t> seed;
  /// objective(centers) <= value + accuracy.
  double accuracy = 0.0;
  /// Objective after every round (heuristics only).
  std::vector<double> trace;
};

/// Moves every center with rho(x_l - a_anchor) > (1 + ||F|| ||F°||) rho,
/// rho = max_i rho(a_anchor - a_i), onto a_anchor. Never increases the
/// objective. `anchor` is 0-based; throws BadIndex.
CenterConfiguration clamp_centers(const Instance& inst, const CenterConfiguration& x,
                                  std::size_t anchor = 0);

inline constexpr std::size_t kMaxExactPoints = 14;
inline constexpr std::size_t kMaxExactCenters = 5;

struct ExactOptions {
  double eps = kDefaultOneCenterEps;
  /// Lift the m <= 14, k <= 5 guard.
  bool force = false;
};

/// Optimal value as the minimum, over partitions of the points into at most
/// k blocks, of the largest block 1-center radius. Partitions are visited as
/// restricted-growth strings (lexicographic) with branch-and-bound on the
/// partial maximum; the first partition reaching the minimum is reported.
/// Block radii are cached per subset. Throws TooLarge past the guard and
/// NonConvergence if a block solve did not converge.
SolveReport exact_by_partition(const Instance& inst, std::size_t k, const ExactOptions& options = {});

struct HeuristicOptions {
  double tol = 1e-9;
  int max_rounds = 200;
  double tie_tolerance = kDefaultTieTolerance;
  double eps = kDefaultOneCenterEps;
};

/// Lloyd-style loop: natural clustering, then each nonempty block's center
/// moves to the block 1-center. Centers with empty blocks stay put. Stops
/// when a round gains less than tol; the trace is non-increasing.
SolveReport alternating_heuristic(const Instance& inst, const CenterConfiguration& init,
                                  const HeuristicOptions& options = {});

struct MultiStartOptions {
  int restarts = 20;
  std::uint64_t seed = 0;
  HeuristicOptions heuristic;
  /// Threads used for restarts; the result does not depend on it.
  int workers = 1;
  /// Tried before the generated starts.
  std::vector<CenterConfiguration> extra_inits;
};

/// Alternating heuristic from a farthest-point traversal start plus
/// `restarts` seeded draws of k distinct demand points, each clamped first.
/// Best by (value, start index).
SolveReport multi_start(const Instance& inst, std::size_t k, const MultiStartOptions& options);

/// Greedy farthest-point traversal from a_1 under the instance gauge.
CenterConfiguration farthest_point_init(const Instance& inst, std::size_t k);

/// Unit w with <a_i, w> != 0 for every nonzero a_i, i.e. a hyperplane
/// through the origin that misses all points except possibly 0. Draws are
/// rejected when |<a_i, w>| < 1e-12 ||a_i||; WitnessNotFound after 1000.
Vector hyperplane_witness(std::span<const Vector> points, std::uint64_t seed);

struct TwoCenterBound {
  Vector witness;
  double epsilon_bar = 0.0;
  double r1 = 0.0;
  /// sqrt(r1^2 - epsilon_bar^2) < r1
  double bound = 0.0;
  /// Euclidean f_2 at the constructed centers.
  double achieved = 0.0;
  Vector one_center;
  /// c + epsilon_bar w and c - epsilon_bar w, c the Euclidean 1-center.
  CenterConfiguration centers;
};

/// Euclidean construction showing min f_2 < min f_1: translate so the
/// 1-center sits at the origin, pick a witness w, and split the ball along w
/// with offset epsilon_bar = min_i eps_i, where eps_i = r/sqrt(2) for a point
/// at the origin and |<a_i, w>|/2 otherwise. Throws DegenerateRadius for
/// fewer than two points.
TwoCenterBound two_center_split_bound(std::span<const Vector> points,
                                      double eps1 = kDefaultOneCenterEps, std::uint64_t seed = 0);

}  // namespace kcenter
