#pragma once

#include "kcenter/gauge.hpp"

#include <cstddef>
#include <vector>

namespace kcenter {

using IndexSet = std::vector<std::size_t>;

inline constexpr double kDefaultTieTolerance = 1e-9;

/// Demand points a_1..a_m in R^d (pairwise distinct) and the gauge that
/// measures distances from centers to them.
class Instance {
 public:
  /// Throws EmptyInstance, DimensionMismatch or DuplicatePoints (the message
  /// names the offending 1-based index pair).
  Instance(Gauge gauge, std::vector<Vector> points);

  const Gauge& gauge() const noexcept { return gauge_; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  const Vector& point(std::size_t i) const { return points_.at(i); }
  std::size_t size() const noexcept { return points_.size(); }
  int dimension() const noexcept { return gauge_.dimension(); }

  /// rho_F(center - a_i)
  double distance(const Vector& center, std::size_t i) const {
    return gauge_(center - points_[i]);
  }

 private:
  Gauge gauge_;
  std::vector<Vector> points_;
};

/// Centers x_1..x_k. They need not be distinct.
struct CenterConfiguration {
  std::vector<Vector> centers;

  std::size_t size() const noexcept { return centers.size(); }
  const Vector& operator[](std::size_t l) const { return centers[l]; }
  Vector& operator[](std::size_t l) { return centers[l]; }
};

/// Throws DimensionMismatch / InvalidParameter if x does not fit the instance.
void check_configuration(const Instance& inst, const CenterConfiguration& x);

/// m x k matrix of rho_F(x_l - a_i).
Eigen::MatrixXd distance_table(const Instance& inst, const CenterConfiguration& x);

/// f_k(x) = max_i min_l rho_F(x_l - a_i). No tolerance anywhere.
double objective(const Instance& inst, const CenterConfiguration& x);

/// Convex pieces of the difference-of-convex form of the objective:
///   g_i   = sum_r rho(x_r - a_i)
///   h_il  = sum_{r != l} rho(x_r - a_i)
///   h_i   = max_l h_il
/// so that g_i - h_i = min_l rho(x_l - a_i) and f_k = max_i (g_i - h_i).
struct DcComponents {
  std::vector<double> g;
  std::vector<double> h;
  std::vector<std::vector<double>> h_parts;  // [i][l]

  /// max_i (g_i - h_i)
  double value() const;
};

DcComponents dc_components(const Instance& inst, const CenterConfiguration& x);

/// J_i(x) = { l : rho(x_l - a_i) <= min_r rho(x_r - a_i) + tol } for every i.
std::vector<IndexSet> active_sets(const Instance& inst, const CenterConfiguration& x,
                                  double tol = kDefaultTieTolerance);

/// A[x_l] as point indices for every center l; a center with an empty set is
/// not attractive.
std::vector<IndexSet> attraction_sets(const Instance& inst, const CenterConfiguration& x,
                                      double tol = kDefaultTieTolerance);

struct ClusteringView {
  std::vector<IndexSet> attraction;      // per center
  std::vector<IndexSet> natural_blocks;  // per center, ties go to the smallest index
  std::vector<IndexSet> active;          // per point
  double tie_tolerance = 0.0;
};

ClusteringView natural_clustering(const Instance& inst, const CenterConfiguration& x,
                                  double tol = kDefaultTieTolerance);

}  // namespace kcenter
