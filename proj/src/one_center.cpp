#include "kcenter/one_center.hpp"

#include "kcenter/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace kcenter {

std::string_view to_string(OneCenterMethod method) {
  switch (method) {
    case OneCenterMethod::Analytic1d: return "analytic1d";
    case OneCenterMethod::AnalyticBox: return "analytic_box";
    case OneCenterMethod::EuclideanExact: return "euclidean_exact";
    case OneCenterMethod::EuclideanIterative: return "euclidean_iterative";
    case OneCenterMethod::Subgradient: return "subgradient";
    case OneCenterMethod::GridOracle: return "grid_oracle";
  }
  return "unknown";
}

namespace {

void require_points(std::span<const Vector> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInstance, "1-center of an empty point set");
  const auto d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "points of mixed dimension");
  }
}

Vector centroid(std::span<const Vector> points) {
  Vector c = Vector::Zero(points.front().size());
  for (const auto& p : points) c += p;
  return c / static_cast<double>(points.size());
}

double euclidean_radius(const Vector& center, std::span<const Vector> points) {
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, (p - center).norm());
  return r;
}

// --- Welzl --------------------------------------------------------------

struct Ball {
  Vector center;
  double radius = -1.0;  // negative: the empty ball
};

Ball ball_through(std::span<const Vector> points, const std::vector<std::size_t>& support) {
  Ball ball;
  if (support.empty()) return ball;
  const Vector& p0 = points[support[0]];
  if (support.size() == 1) return {p0, 0.0};

  const auto d = p0.size();
  const auto s = static_cast<Eigen::Index>(support.size()) - 1;
  Eigen::MatrixXd q(d, s);
  for (Eigen::Index j = 0; j < s; ++j) q.col(j) = points[support[static_cast<std::size_t>(j) + 1]] - p0;
  // Center in the affine hull: (Q^T Q) lambda = diag(Q^T Q) / 2.
  const Eigen::MatrixXd gram = q.transpose() * q;
  const Vector rhs = 0.5 * gram.diagonal();
  const Vector lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  ball.center = p0 + q * lambda;
  ball.radius = 0.0;
  for (std::size_t idx : support) ball.radius = std::max(ball.radius, (points[idx] - ball.center).norm());
  return ball;
}

bool ball_covers(const Ball& ball, const Vector& p) {
  if (ball.radius < 0.0) return false;
  const double slack = 1e-12 * (1.0 + ball.radius + ball.center.lpNorm<Eigen::Infinity>());
  return (p - ball.center).norm() <= ball.radius + slack;
}

Ball move_to_front(std::span<const Vector> points, std::vector<std::size_t>& order, std::size_t n,
                   std::vector<std::size_t>& support, std::size_t max_support) {
  Ball ball = ball_through(points, support);
  if (support.size() == max_support) return ball;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = order[i];
    if (ball_covers(ball, points[p])) continue;
    support.push_back(p);
    ball = move_to_front(points, order, i, support, max_support);
    support.pop_back();
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i),
                order.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  return ball;
}

// --- subgradient ----------------------------------------------------------

struct Evaluation {
  double value = 0.0;
  std::size_t argmax = 0;
};

Evaluation evaluate(const Gauge& gauge, const Vector& x, std::span<const Vector> points) {
  Evaluation e{-1.0, 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double v = gauge(x - points[i]);
    if (v > e.value) e = {v, i};
  }
  return e;
}

struct StartOutcome {
  Vector best;
  double value = 0.0;
  double gap = 0.0;
  long iterations = 0;
  bool converged = true;
};

StartOutcome run_start(const Gauge& gauge, std::span<const Vector> points, Vector x, double eps,
                       double initial_gap, long budget, int stall_limit) {
  StartOutcome out;
  Evaluation e = evaluate(gauge, x, points);
  out.best = x;
  out.value = e.value;
  if (e.value == 0.0) return out;

  double gap = initial_gap > 0.0 ? initial_gap : 0.5 * e.value;
  int stall = 0;
  while (gap >= 0.25 * eps) {
    if (out.iterations >= budget) {
      out.converged = false;
      break;
    }
    const Vector g = gauge.subgradient(x - points[e.argmax]);
    const double g2 = g.squaredNorm();
    if (g2 == 0.0) break;
    const double target = out.value - gap;
    x -= ((e.value - target) / g2) * g;
    e = evaluate(gauge, x, points);
    ++out.iterations;
    if (e.value < out.value) {
      stall = e.value <= out.value - 0.5 * gap ? 0 : stall + 1;
      out.value = e.value;
      out.best = x;
    } else {
      ++stall;
    }
    if (stall >= stall_limit) {
      gap *= 0.5;
      stall = 0;
      x = out.best;
      e = evaluate(gauge, x, points);
    }
  }
  out.gap = gap;
  return out;
}

}  // namespace

double covering_radius(const Gauge& gauge, const Vector& center, std::span<const Vector> points) {
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, gauge(center - p));
  return r;
}

OneCenterResult one_center_1d(const shape::Interval& unit, std::span<const double> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInstance, "1-center of an empty point set");
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end());
  const double alpha = *lo;
  const double beta = *hi;
  const double a = unit.a;
  const double b = unit.b;
  OneCenterResult out;
  // Distances are rho(x - a_i): the ball B_F[x, r] reaches from x - r b to
  // x - r a, hence the reflected form of the usual midpoint formula.
  out.center = Vector::Constant(1, (b * beta - a * alpha) / (b - a));
  out.radius = (beta - alpha) / (b - a);
  out.method = OneCenterMethod::Analytic1d;
  out.accuracy = 0.0;
  return out;
}

OneCenterResult one_center_1d(const Gauge& gauge, std::span<const Vector> points) {
  const auto unit = as_interval(gauge);
  if (!unit) throw Error(ErrorCode::WrongDimension, "closed-form 1-center needs dimension 1");
  require_points(points);
  std::vector<double> line;
  line.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 1) throw Error(ErrorCode::WrongDimension, "points must be scalars");
    line.push_back(p[0]);
  }
  return one_center_1d(*unit, line);
}

OneCenterResult min_enclosing_ball(std::span<const Vector> points) {
  require_points(points);
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Fixed shuffle: expected linear time without giving up determinism.
  std::mt19937_64 rng(0x6b63656e746572ULL);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng() % i)]);
  }
  std::vector<std::size_t> support;
  const auto max_support = static_cast<std::size_t>(points.front().size()) + 1;
  const Ball ball = move_to_front(points, order, order.size(), support, max_support);

  OneCenterResult out;
  out.center = ball.center;
  out.radius = euclidean_radius(ball.center, points);
  out.method = OneCenterMethod::EuclideanExact;
  out.accuracy = 0.0;
  return out;
}

OneCenterResult one_center_coreset(std::span<const Vector> points, double eps, long max_iterations) {
  require_points(points);
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidParameter, "eps must be positive");
  const double wanted = std::ceil(1.0 / (eps * eps));
  const long steps = static_cast<long>(std::min(wanted, static_cast<double>(max_iterations)));
  Vector x = centroid(points);
  for (long t = 1; t <= steps; ++t) {
    std::size_t far = 0;
    double far_dist = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double dist = (points[i] - x).squaredNorm();
      if (dist > far_dist) {
        far_dist = dist;
        far = i;
      }
    }
    x += (points[far] - x) / static_cast<double>(t + 1);
  }
  OneCenterResult out;
  out.center = x;
  out.radius = euclidean_radius(x, points);
  out.method = OneCenterMethod::EuclideanIterative;
  out.accuracy = steps > 0 ? out.radius / std::sqrt(static_cast<double>(steps)) : out.radius;
  out.iterations = steps;
  return out;
}

OneCenterResult one_center_euclidean(std::span<const Vector> points, double eps) {
  require_points(points);
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidParameter, "eps must be positive");
  if (points.front().size() == 1) {
    std::vector<double> line;
    for (const auto& p : points) line.push_back(p[0]);
    return one_center_1d(shape::Interval{-1.0, 1.0}, line);
  }
  return min_enclosing_ball(points);
}

OneCenterResult one_center_box(const Gauge& gauge, std::span<const Vector> points) {
  require_points(points);
  Vector radii;
  if (const auto* box = std::get_if<shape::Box>(&gauge.descriptor())) {
    radii = box->radii;
  } else if (std::holds_alternative<shape::LInf>(gauge.descriptor())) {
    radii = Vector::Ones(gauge.dimension());
  } else {
    throw Error(ErrorCode::WrongGaugeKind, "separable 1-center needs a box or linf gauge");
  }
  Vector lo = points.front();
  Vector hi = points.front();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  OneCenterResult out;
  out.center = 0.5 * (lo + hi);
  out.radius = covering_radius(gauge, out.center, points);
  out.method = OneCenterMethod::AnalyticBox;
  out.accuracy = 0.0;
  return out;
}

OneCenterResult one_center_general(const Gauge& gauge, std::span<const Vector> points, double eps,
                                   const SubgradientOptions& options) {
  require_points(points);
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidParameter, "eps must be positive");
  if (points.front().size() != gauge.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "points do not match the gauge dimension");
  }
  if (options.refine) {
    if (gauge.dimension() == 1) return one_center_1d(gauge, points);
    if (gauge.is_euclidean()) return one_center_euclidean(points, eps);
  }

  const long budget =
      options.max_iterations > 0 ? options.max_iterations : 50L * static_cast<long>(std::ceil(1.0 / eps));
  const int stall_limit = options.stall_limit > 0 ? options.stall_limit : 30 + 10 * gauge.dimension();

  std::vector<Vector> starts(points.begin(), points.end());
  starts.push_back(centroid(points));

  OneCenterResult out;
  out.method = OneCenterMethod::Subgradient;
  out.radius = std::numeric_limits<double>::infinity();
  double worst_gap = 0.0;
  for (const auto& start : starts) {
    const StartOutcome run = run_start(gauge, points, start, eps, 0.0, budget, stall_limit);
    out.iterations += run.iterations;
    if (!run.converged) {
      out.converged = false;
      worst_gap = std::max(worst_gap, run.gap);
    }
    if (run.value < out.radius) {
      out.radius = run.value;
      out.center = run.best;
    }
  }

  // Further rounds from the incumbent until a round gains less than eps.
  for (int round = 0; round < 8 && out.radius > 0.0; ++round) {
    const StartOutcome run =
        run_start(gauge, points, out.center, eps, 0.05 * out.radius, budget, stall_limit);
    out.iterations += run.iterations;
    const double gain = out.radius - run.value;
    if (run.value < out.radius) {
      out.radius = run.value;
      out.center = run.best;
    }
    if (gain < eps) break;
  }

  out.radius = covering_radius(gauge, out.center, points);
  out.accuracy = out.converged ? eps : std::max(eps, 2.0 * worst_gap);
  return out;
}

OneCenterResult one_center_grid_oracle(const Gauge& gauge, std::span<const Vector> points,
                                       int resolution) {
  require_points(points);
  const int d = gauge.dimension();
  if (d > 2) throw Error(ErrorCode::DimensionTooLarge, "grid oracle supports d <= 2");
  if (resolution < 1) throw Error(ErrorCode::InvalidParameter, "resolution must be positive");

  const Vector& anchor = points.front();
  double rho = 0.0;
  for (const auto& p : points) rho = std::max(rho, gauge(anchor - p));

  OneCenterResult out;
  out.method = OneCenterMethod::GridOracle;
  if (rho == 0.0) {
    out.center = anchor;
    return out;
  }

  // B_F[a_1, rho] lies in the Euclidean ball of radius ||F|| rho around a_1.
  const double half = gauge.constants().set_norm * rho;
  Vector lo = anchor.array() - half;
  Vector hi = anchor.array() + half;
  Vector best = anchor;
  double best_value = covering_radius(gauge, anchor, points);
  double coarse_diagonal = 0.0;

  for (int pass = 0; pass < 3; ++pass) {
    const Vector step = (hi - lo) / resolution;
    if (pass == 0) coarse_diagonal = step.norm();
    const int ny = d == 2 ? resolution : 0;
    Vector node(d);
    for (int ix = 0; ix <= resolution; ++ix) {
      for (int iy = 0; iy <= ny; ++iy) {
        node[0] = lo[0] + ix * step[0];
        if (d == 2) node[1] = lo[1] + iy * step[1];
        const double v = covering_radius(gauge, node, points);
        if (v < best_value) {
          best_value = v;
          best = node;
        }
      }
    }
    lo = best - 2.0 * step;
    hi = best + 2.0 * step;
    out.iterations += static_cast<long>(resolution + 1) * (ny + 1);
  }
  out.center = best;
  out.radius = best_value;
  out.accuracy = gauge.constants().polar_norm * 0.5 * coarse_diagonal;
  return out;
}

OneCenterResult solve_one_center(const Gauge& gauge, std::span<const Vector> points, double eps) {
  if (gauge.dimension() == 1) return one_center_1d(gauge, points);
  const auto& desc = gauge.descriptor();
  if (std::holds_alternative<shape::Box>(desc) || std::holds_alternative<shape::LInf>(desc)) {
    return one_center_box(gauge, points);
  }
  if (gauge.is_euclidean()) return one_center_euclidean(points, eps);
  return one_center_general(gauge, points, eps);
}

}  // namespace kcenter
