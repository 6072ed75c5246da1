#include "kcenter/gauge.hpp"

#include "kcenter/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace kcenter {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kBoundaryTol = 1e-12;

void require_dimension(const Vector& v, int dimension) {
  if (v.size() != dimension) {
    throw Error(ErrorCode::DimensionMismatch, "vector of size " + std::to_string(v.size()) +
                                                  " for a gauge in dimension " +
                                                  std::to_string(dimension));
  }
}

bool all_finite(const Vector& v) { return v.allFinite(); }

// Visits every size-r subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  if (r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

Eigen::MatrixXd stack_rows(const std::vector<Vector>& normals, int dimension) {
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(normals.size()), dimension);
  for (std::size_t j = 0; j < normals.size(); ++j) {
    rows.row(static_cast<Eigen::Index>(j)) = normals[j].transpose();
  }
  return rows;
}

// {x : Ux <= 0} != {0} means the polyhedron {x : Ux <= 1} is unbounded.
// If U has full column rank the cone is pointed, and it is nontrivial iff it
// has an extreme ray, which is cut out by d-1 independent tight rows.
bool recession_cone_is_trivial(const Eigen::MatrixXd& rows) {
  const auto d = static_cast<int>(rows.cols());
  const auto count = static_cast<int>(rows.rows());
  Eigen::FullPivLU<Eigen::MatrixXd> full(rows);
  if (full.rank() < d) return false;

  const double scale = rows.rowwise().norm().maxCoeff();
  const double slack = 1e-10 * scale;
  bool trivial = true;
  for_each_subset(count, d - 1, [&](const std::vector<int>& subset) {
    if (!trivial) return;
    Vector ray;
    if (d == 1) {
      ray = Vector::Ones(1);
    } else {
      Eigen::MatrixXd tight(d - 1, d);
      for (int r = 0; r < d - 1; ++r) tight.row(r) = rows.row(subset[static_cast<std::size_t>(r)]);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(tight);
      if (lu.rank() < d - 1) return;
      ray = lu.kernel().col(0);
      ray.normalize();
    }
    for (double sign : {1.0, -1.0}) {
      const Vector dots = rows * (sign * ray);
      if (dots.maxCoeff() <= slack) {
        trivial = false;
        return;
      }
    }
  });
  return trivial;
}

GaugeConstants halfspace_constants(const Eigen::MatrixXd& rows) {
  const auto d = static_cast<int>(rows.cols());
  const auto count = static_cast<int>(rows.rows());
  GaugeConstants out;
  out.polar_norm = rows.rowwise().norm().maxCoeff();

  double best = -1.0;
  const Vector ones = Vector::Ones(d);
  for_each_subset(count, d, [&](const std::vector<int>& subset) {
    Eigen::MatrixXd tight(d, d);
    for (int r = 0; r < d; ++r) tight.row(r) = rows.row(subset[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(tight);
    if (!lu.isInvertible()) return;
    const Vector vertex = lu.solve(ones);
    if (!vertex.allFinite()) return;
    if ((rows * vertex).maxCoeff() > 1.0 + 1e-9) return;
    best = std::max(best, vertex.norm());
  });
  if (best < 0.0) {
    throw Error(ErrorCode::DegenerateFacets, "no d-subset of normals yields a vertex");
  }
  out.set_norm = best;
  out.exact = true;
  return out;
}

}  // namespace

std::string_view kind_name(const GaugeDescriptor& descriptor) {
  return std::visit(overloaded{
                        [](const shape::Euclidean&) { return std::string_view("euclidean"); },
                        [](const shape::Lp&) { return std::string_view("lp"); },
                        [](const shape::LInf&) { return std::string_view("linf"); },
                        [](const shape::Box&) { return std::string_view("box"); },
                        [](const shape::Interval&) { return std::string_view("interval"); },
                        [](const shape::Halfspaces&) { return std::string_view("halfspaces"); },
                    },
                    descriptor);
}

GaugeConstants constants_of(const GaugeDescriptor& descriptor, int dimension) {
  const double d = dimension;
  return std::visit(
      overloaded{
          [](const shape::Euclidean&) { return GaugeConstants{1.0, 1.0, true}; },
          [d](const shape::LInf&) { return GaugeConstants{std::sqrt(d), 1.0, true}; },
          [d](const shape::Lp& lp) {
            // max ||x||_2 over ||x||_p <= 1 is d^(1/2 - 1/p) for p >= 2, else 1;
            // the polar is the unit ball of the conjugate exponent.
            const double q = lp.p / (lp.p - 1.0);
            auto reach = [d](double e) { return e >= 2.0 ? std::pow(d, 0.5 - 1.0 / e) : 1.0; };
            return GaugeConstants{reach(lp.p), reach(q), true};
          },
          [](const shape::Box& box) {
            return GaugeConstants{box.radii.norm(), box.radii.cwiseInverse().maxCoeff(), true};
          },
          [](const shape::Interval& iv) {
            return GaugeConstants{std::max(-iv.a, iv.b), std::max(-1.0 / iv.a, 1.0 / iv.b), true};
          },
          [dimension](const shape::Halfspaces& hs) {
            return halfspace_constants(stack_rows(hs.normals, dimension));
          },
      },
      descriptor);
}

Gauge::Gauge(GaugeDescriptor descriptor, int dimension)
    : descriptor_(std::move(descriptor)), dimension_(dimension) {
  if (const auto* hs = std::get_if<shape::Halfspaces>(&descriptor_)) {
    normal_rows_ = stack_rows(hs->normals, dimension_);
  }
}

Gauge validate_gauge(GaugeDescriptor descriptor, int dimension) {
  if (dimension < 1) {
    throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
  }
  std::visit(overloaded{
                 [](const shape::Euclidean&) {},
                 [](const shape::LInf&) {},
                 [](const shape::Lp& lp) {
                   if (!std::isfinite(lp.p) || !(lp.p > 1.0)) {
                     throw Error(ErrorCode::InvalidParameter, "lp gauge requires finite p > 1");
                   }
                 },
                 [dimension](const shape::Box& box) {
                   require_dimension(box.radii, dimension);
                   if (!all_finite(box.radii)) {
                     throw Error(ErrorCode::InvalidParameter, "box radii must be finite");
                   }
                   if (box.radii.minCoeff() <= 0.0) {
                     throw Error(ErrorCode::OriginNotInterior, "box radii must be positive");
                   }
                 },
                 [dimension](const shape::Interval& iv) {
                   if (dimension != 1) {
                     throw Error(ErrorCode::DimensionMismatch, "interval gauge needs dimension 1");
                   }
                   if (!std::isfinite(iv.a) || !std::isfinite(iv.b)) {
                     throw Error(ErrorCode::InvalidParameter, "interval endpoints must be finite");
                   }
                   if (!(iv.a < 0.0 && iv.b > 0.0)) {
                     throw Error(ErrorCode::OriginNotInterior, "interval needs a < 0 < b");
                   }
                 },
                 [dimension](const shape::Halfspaces& hs) {
                   if (hs.normals.empty()) {
                     throw Error(ErrorCode::UnboundedSet, "no halfspaces given");
                   }
                   for (const auto& u : hs.normals) {
                     require_dimension(u, dimension);
                     if (!all_finite(u)) {
                       throw Error(ErrorCode::InvalidParameter, "normals must be finite");
                     }
                   }
                   if (!recession_cone_is_trivial(stack_rows(hs.normals, dimension))) {
                     throw Error(ErrorCode::UnboundedSet, "normals do not positively span R^d");
                   }
                 },
             },
             descriptor);

  Gauge gauge(std::move(descriptor), dimension);
  gauge.constants_ = constants_of(gauge.descriptor_, dimension);
  return gauge;
}

double Gauge::operator()(const Vector& v) const {
  require_dimension(v, dimension_);
  return std::visit(
      overloaded{
          [&](const shape::Euclidean&) { return v.norm(); },
          [&](const shape::LInf&) { return v.lpNorm<Eigen::Infinity>(); },
          [&](const shape::Lp& lp) {
            const double top = v.lpNorm<Eigen::Infinity>();
            if (top == 0.0) return 0.0;
            double sum = 0.0;
            for (Eigen::Index c = 0; c < v.size(); ++c) sum += std::pow(std::abs(v[c]) / top, lp.p);
            return top * std::pow(sum, 1.0 / lp.p);
          },
          [&](const shape::Box& box) { return v.cwiseAbs().cwiseQuotient(box.radii).maxCoeff(); },
          [&](const shape::Interval& iv) { return v[0] >= 0.0 ? v[0] / iv.b : v[0] / iv.a; },
          [&](const shape::Halfspaces&) { return std::max(0.0, (normal_rows_ * v).maxCoeff()); },
      },
      descriptor_);
}

Vector Gauge::subgradient(const Vector& v) const {
  require_dimension(v, dimension_);
  Vector g = Vector::Zero(dimension_);
  if (v.isZero(0.0)) return g;
  std::visit(overloaded{
                 [&](const shape::Euclidean&) { g = v / v.norm(); },
                 [&](const shape::LInf&) {
                   Eigen::Index c = 0;
                   v.cwiseAbs().maxCoeff(&c);
                   g[c] = v[c] > 0.0 ? 1.0 : -1.0;
                 },
                 [&](const shape::Lp& lp) {
                   const double norm = (*this)(v);
                   for (Eigen::Index c = 0; c < v.size(); ++c) {
                     const double mag = std::pow(std::abs(v[c]) / norm, lp.p - 1.0);
                     g[c] = v[c] >= 0.0 ? mag : -mag;
                   }
                 },
                 [&](const shape::Box& box) {
                   Eigen::Index c = 0;
                   v.cwiseAbs().cwiseQuotient(box.radii).maxCoeff(&c);
                   g[c] = (v[c] > 0.0 ? 1.0 : -1.0) / box.radii[c];
                 },
                 [&](const shape::Interval& iv) { g[0] = v[0] > 0.0 ? 1.0 / iv.b : 1.0 / iv.a; },
                 [&](const shape::Halfspaces&) {
                   Eigen::Index j = 0;
                   const double top = (normal_rows_ * v).maxCoeff(&j);
                   if (top > 0.0) g = normal_rows_.row(j).transpose();
                 },
             },
             descriptor_);
  return g;
}

bool asymmetry_bound_check(const Gauge& gauge, const Vector& v) {
  const auto& k = gauge.constants();
  return gauge(v) <= k.set_norm * k.polar_norm * gauge(-v) + kBoundaryTol;
}

bool generalized_ball_contains(const Gauge& gauge, const Vector& center, double radius,
                               const Vector& y) {
  if (radius < 0.0) {
    throw Error(ErrorCode::NegativeRadius, "ball radius must be nonnegative");
  }
  require_dimension(center, gauge.dimension());
  return gauge(y - center) <= radius + kBoundaryTol;
}

std::optional<shape::Interval> as_interval(const Gauge& gauge) {
  if (gauge.dimension() != 1) return std::nullopt;
  return std::visit(overloaded{
                        [](const shape::Euclidean&) { return shape::Interval{-1.0, 1.0}; },
                        [](const shape::LInf&) { return shape::Interval{-1.0, 1.0}; },
                        [](const shape::Lp&) { return shape::Interval{-1.0, 1.0}; },
                        [](const shape::Box& box) {
                          return shape::Interval{-box.radii[0], box.radii[0]};
                        },
                        [](const shape::Interval& iv) { return iv; },
                        [](const shape::Halfspaces& hs) {
                          // u x <= 1: positive u caps the right end, negative u the left.
                          double a = -std::numeric_limits<double>::infinity();
                          double b = std::numeric_limits<double>::infinity();
                          for (const auto& u : hs.normals) {
                            if (u[0] > 0.0) b = std::min(b, 1.0 / u[0]);
                            if (u[0] < 0.0) a = std::max(a, 1.0 / u[0]);
                          }
                          return shape::Interval{a, b};
                        },
                    },
                    gauge.descriptor());
}

}  // namespace kcenter
