#pragma once

// Test-only brute-force oracles and random generators. Nothing here calls
// the solvers it is used to check.

#include "kcenter/gauge.hpp"
#include "kcenter/instance.hpp"
#include "kcenter/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace kcenter::testing {

/// inf{ t >= 0 : <u_j, v> <= t for all j } by bisection on t.
inline double bisection_gauge(const std::vector<Vector>& normals, const Vector& v) {
  auto member = [&](double t) {
    return std::all_of(normals.begin(), normals.end(), [&](const Vector& u) { return u.dot(v) <= t; });
  };
  double lo = 0.0;
  double hi = 1.0;
  while (!member(hi)) hi *= 2.0;
  if (member(0.0)) return 0.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (member(mid) ? hi : lo) = mid;
  }
  return hi;
}

inline Vector random_vector(std::mt19937_64& rng, int d, double lo = -1.0, double hi = 1.0) {
  Vector v(d);
  for (int c = 0; c < d; ++c) v[c] = lo + (hi - lo) * uniform01(rng);
  return v;
}

/// Random normals that positively span R^d: the validator must accept them.
inline std::vector<Vector> random_halfspaces(std::mt19937_64& rng, int d, int count) {
  while (true) {
    std::vector<Vector> normals;
    for (int j = 0; j < count; ++j) {
      normals.push_back(random_unit_vector(rng, d) * (0.5 + 1.5 * uniform01(rng)));
    }
    try {
      (void)validate_gauge(shape::Halfspaces{normals}, d);
      return normals;
    } catch (...) {
    }
  }
}

/// One of every gauge kind that fits dimension d.
inline Gauge random_gauge(std::mt19937_64& rng, int d) {
  const int choice = static_cast<int>(rng() % (d == 1 ? 6 : 5));
  switch (choice) {
    case 0: return validate_gauge(shape::Euclidean{}, d);
    case 1: return validate_gauge(shape::Lp{1.2 + 4.0 * uniform01(rng)}, d);
    case 2: return validate_gauge(shape::LInf{}, d);
    case 3: return validate_gauge(shape::Box{random_vector(rng, d, 0.2, 3.0)}, d);
    case 4: return validate_gauge(shape::Halfspaces{random_halfspaces(rng, d, d + 1 + static_cast<int>(rng() % 4))}, d);
    default: return validate_gauge(shape::Interval{-0.2 - 3.0 * uniform01(rng), 0.2 + 3.0 * uniform01(rng)}, d);
  }
}

inline std::vector<Vector> random_points(std::mt19937_64& rng, int d, std::size_t m, double scale = 1.0) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < m; ++i) pts.push_back(random_vector(rng, d, 0.0, scale));
  return pts;
}

inline CenterConfiguration random_centers(std::mt19937_64& rng, int d, std::size_t k, double lo = -0.5,
                                          double hi = 1.5) {
  CenterConfiguration x;
  for (std::size_t l = 0; l < k; ++l) x.centers.push_back(random_vector(rng, d, lo, hi));
  return x;
}

inline double brute_objective(const Gauge& g, const std::vector<Vector>& pts,
                              const std::vector<Vector>& centers) {
  double worst = 0.0;
  for (const auto& a : pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : centers) best = std::min(best, g(c - a));
    worst = std::max(worst, best);
  }
  return worst;
}

struct GridSearchResult {
  double value = 0.0;
  std::vector<Vector> centers;
  /// Largest spacing of the coarse grid times sqrt(2) / 2: every point of
  /// the box is that close to a node (Euclidean, d = 2).
  double coarse_half_diagonal = 0.0;
};

/// Minimum of f_k over k-tuples of nodes of a (resolution+1)^2 grid on the
/// bounding box of the points, refined twice on finer grids around the best
/// tuple's centers. For a fixed node set the tuple minimum equals
///   min over covers (M_1..M_k) of max_l min_node max_{i in M_l} rho(node - a_i),
/// which is evaluated exactly over the 2^m point subsets (m <= 10).
/// Euclidean only: clamping centers into the bounding box never hurts.
inline GridSearchResult grid_tuple_search(const std::vector<Vector>& pts, std::size_t k, int resolution) {
  const std::size_t m = pts.size();
  const std::size_t full = (std::size_t{1} << m) - 1;
  Vector lo = pts.front();
  Vector hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  GridSearchResult out;

  std::vector<Vector> nodes;
  auto add_grid = [&](const Vector& a, const Vector& b) {
    const Vector step = (b - a) / resolution;
    for (int ix = 0; ix <= resolution; ++ix) {
      for (int iy = 0; iy <= resolution; ++iy) {
        Vector node(2);
        node << a[0] + ix * step[0], a[1] + iy * step[1];
        nodes.push_back(node);
      }
    }
    return step;
  };
  const Vector coarse = add_grid(lo, hi);
  out.coarse_half_diagonal = coarse.norm() / 2.0;

  for (int pass = 0; pass < 3; ++pass) {
    // cost[M] = best node radius for covering subset M, with its node.
    std::vector<double> cost(full + 1, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> arg(full + 1, 0);
    std::vector<double> dist(m);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      for (std::size_t i = 0; i < m; ++i) dist[i] = (nodes[n] - pts[i]).norm();
      for (std::size_t mask = 1; mask <= full; ++mask) {
        double r = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1U) r = std::max(r, dist[i]);
        }
        if (r < cost[mask]) {
          cost[mask] = r;
          arg[mask] = n;
        }
      }
    }
    // best[j][mask]: k-tuple value restricted to covering mask with j nodes.
    std::vector<std::vector<double>> best(k + 1, std::vector<double>(full + 1, std::numeric_limits<double>::infinity()));
    std::vector<std::vector<std::size_t>> pick(k + 1, std::vector<std::size_t>(full + 1, 0));
    best[0][0] = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t mask = 0; mask <= full; ++mask) {
        best[j][mask] = best[j - 1][mask];
        pick[j][mask] = 0;
        for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
          const double v = std::max(cost[sub], best[j - 1][mask ^ sub]);
          if (v < best[j][mask]) {
            best[j][mask] = v;
            pick[j][mask] = sub;
          }
        }
      }
    }
    std::vector<Vector> centers;
    std::size_t mask = full;
    for (std::size_t j = k; j >= 1; --j) {
      const std::size_t sub = pick[j][mask];
      if (sub != 0) {
        centers.push_back(nodes[arg[sub]]);
        mask ^= sub;
      }
    }
    out.value = best[k][full];
    out.centers = centers;

    const Vector step = pass == 0 ? coarse : Vector((hi - lo) / resolution);
    nodes.clear();
    for (const auto& c : centers) {
      const Vector a = c - 2.0 * step;
      const Vector b = c + 2.0 * step;
      lo = a;
      hi = b;
      add_grid(a, b);
    }
  }
  // Recheck the tuple directly.
  out.value = brute_objective(validate_gauge(shape::Euclidean{}, 2), pts, out.centers);
  return out;
}

}  // namespace kcenter::testing
