#pragma once

// Minkowski gauges of compact convex sets F with 0 in int(F).
//
//   rho_F(v) = inf{ t >= 0 : v in t F }
//
// The gauge is a positively homogeneous, subadditive function that is zero
// only at the origin. It need not be symmetric: rho_F(-v) can differ from
// rho_F(v) when F is not centrally symmetric (Interval, Halfspaces).

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace kcenter {

using Vector = Eigen::VectorXd;

namespace shape {

struct Euclidean {};

/// Unit ball of the p-norm, p > 1.
struct Lp {
  double p = 2.0;
};

struct LInf {};

/// Axis-aligned box [-r_c, r_c] per coordinate.
struct Box {
  Vector radii;
};

/// F = [a, b] on the real line with a < 0 < b.
struct Interval {
  double a = -1.0;
  double b = 1.0;
};

/// F = { x : <u_j, x> <= 1 for all j }, H-representation only.
struct Halfspaces {
  std::vector<Vector> normals;
};

}  // namespace shape

using GaugeDescriptor =
    std::variant<shape::Euclidean, shape::Lp, shape::LInf, shape::Box, shape::Interval,
                 shape::Halfspaces>;

std::string_view kind_name(const GaugeDescriptor& descriptor);

/// Norm constants of F: set_norm = ||F|| = sup{ ||x||_2 : x in F } and
/// polar_norm = ||F°|| = sup{ ||y||_2 : y in F° }. polar_norm is also the
/// Lipschitz constant of rho_F with respect to the Euclidean norm.
struct GaugeConstants {
  double set_norm = 0.0;
  double polar_norm = 0.0;
  bool exact = false;
};

/// A descriptor that passed validate_gauge, bound to its dimension. Immutable.
class Gauge {
 public:
  const GaugeDescriptor& descriptor() const noexcept { return descriptor_; }
  int dimension() const noexcept { return dimension_; }
  const GaugeConstants& constants() const noexcept { return constants_; }
  std::string_view kind() const { return kind_name(descriptor_); }

  /// rho_F(v). Throws DimensionMismatch.
  double operator()(const Vector& v) const;

  /// A subgradient of rho_F at v (zero vector at v = 0). For Halfspaces the
  /// active normal with the smallest index is returned.
  Vector subgradient(const Vector& v) const;

  bool is_euclidean() const noexcept {
    return std::holds_alternative<shape::Euclidean>(descriptor_);
  }

 private:
  friend Gauge validate_gauge(GaugeDescriptor descriptor, int dimension);

  Gauge(GaugeDescriptor descriptor, int dimension);

  GaugeDescriptor descriptor_;
  int dimension_ = 0;
  GaugeConstants constants_;
  Eigen::MatrixXd normal_rows_;  // Halfspaces only, one normal per row
};

/// Checks that the descriptor describes a compact convex set with the origin
/// in its interior in R^dimension. Throws UnboundedSet, OriginNotInterior,
/// DimensionMismatch or InvalidParameter.
Gauge validate_gauge(GaugeDescriptor descriptor, int dimension);

inline double gauge_eval(const Gauge& gauge, const Vector& v) { return gauge(v); }

/// ||F|| and ||F°||. For Halfspaces ||F|| comes from enumerating every
/// d-subset of facets (C(J, d) linear solves) and keeping the feasible
/// vertices, so it is meant for small J and d.
GaugeConstants constants_of(const GaugeDescriptor& descriptor, int dimension);

/// rho(v) <= ||F|| ||F°|| rho(-v), with 1e-12 slack.
bool asymmetry_bound_check(const Gauge& gauge, const Vector& v);

/// y in B_F[center, radius] = { y : rho(y - center) <= radius } up to 1e-12.
bool generalized_ball_contains(const Gauge& gauge, const Vector& center, double radius,
                               const Vector& y);

/// If the gauge lives on the real line, its unit set as an interval [a, b].
/// Every kind qualifies in dimension 1.
std::optional<shape::Interval> as_interval(const Gauge& gauge);

}  // namespace kcenter
