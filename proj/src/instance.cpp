#include "kcenter/instance.hpp"

#include "kcenter/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace kcenter {

Instance::Instance(Gauge gauge, std::vector<Vector> points)
    : gauge_(std::move(gauge)), points_(std::move(points)) {
  if (points_.empty()) {
    throw Error(ErrorCode::EmptyInstance, "at least one demand point is required");
  }
  const int d = gauge_.dimension();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + std::to_string(i + 1) + " has dimension " +
                      std::to_string(points_[i].size()) + ", expected " + std::to_string(d));
    }
    if (!points_[i].allFinite()) {
      throw Error(ErrorCode::InvalidParameter, "point " + std::to_string(i + 1) + " is not finite");
    }
  }
  // Exact comparison: a sort keeps this O(m log m) for larger inputs.
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto less = [this](std::size_t l, std::size_t r) {
    return std::lexicographical_compare(points_[l].begin(), points_[l].end(), points_[r].begin(),
                                        points_[r].end());
  };
  std::stable_sort(order.begin(), order.end(), less);
  for (std::size_t s = 1; s < order.size(); ++s) {
    if (points_[order[s - 1]] == points_[order[s]]) {
      const auto lo = std::min(order[s - 1], order[s]) + 1;
      const auto hi = std::max(order[s - 1], order[s]) + 1;
      throw Error(ErrorCode::DuplicatePoints,
                  "points " + std::to_string(lo) + " and " + std::to_string(hi) + " coincide");
    }
  }
}

void check_configuration(const Instance& inst, const CenterConfiguration& x) {
  if (x.size() == 0) {
    throw Error(ErrorCode::InvalidParameter, "at least one center is required");
  }
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (x[l].size() != inst.dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "center " + std::to_string(l + 1) +
                                                    " has dimension " +
                                                    std::to_string(x[l].size()));
    }
  }
}

Eigen::MatrixXd distance_table(const Instance& inst, const CenterConfiguration& x) {
  check_configuration(inst, x);
  const auto m = static_cast<Eigen::Index>(inst.size());
  const auto k = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd table(m, k);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index l = 0; l < k; ++l) {
      table(i, l) = inst.distance(x[static_cast<std::size_t>(l)], static_cast<std::size_t>(i));
    }
  }
  return table;
}

double objective(const Instance& inst, const CenterConfiguration& x) {
  const Eigen::MatrixXd table = distance_table(inst, x);
  return table.rowwise().minCoeff().maxCoeff();
}

double DcComponents::value() const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) best = std::max(best, g[i] - h[i]);
  return best;
}

DcComponents dc_components(const Instance& inst, const CenterConfiguration& x) {
  const Eigen::MatrixXd table = distance_table(inst, x);
  DcComponents out;
  const auto m = static_cast<std::size_t>(table.rows());
  const auto k = static_cast<std::size_t>(table.cols());
  out.g.resize(m);
  out.h.resize(m);
  out.h_parts.assign(m, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t l = 0; l < k; ++l) sum += table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l));
    out.g[i] = sum;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < k; ++l) {
      // Summed directly rather than as g_i - rho_il so the empty sum is exactly 0.
      double part = 0.0;
      for (std::size_t r = 0; r < k; ++r) {
        if (r != l) part += table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r));
      }
      out.h_parts[i][l] = part;
      best = std::max(best, part);
    }
    out.h[i] = best;
  }
  return out;
}

std::vector<IndexSet> active_sets(const Instance& inst, const CenterConfiguration& x, double tol) {
  if (tol < 0.0) throw Error(ErrorCode::InvalidParameter, "tie tolerance must be nonnegative");
  const Eigen::MatrixXd table = distance_table(inst, x);
  std::vector<IndexSet> out(inst.size());
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    const double best = table.row(i).minCoeff();
    for (Eigen::Index l = 0; l < table.cols(); ++l) {
      if (table(i, l) <= best + tol) out[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(l));
    }
  }
  return out;
}

std::vector<IndexSet> attraction_sets(const Instance& inst, const CenterConfiguration& x,
                                      double tol) {
  const auto active = active_sets(inst, x, tol);
  std::vector<IndexSet> out(x.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t l : active[i]) out[l].push_back(i);
  }
  return out;
}

ClusteringView natural_clustering(const Instance& inst, const CenterConfiguration& x, double tol) {
  ClusteringView view;
  view.tie_tolerance = tol;
  view.active = active_sets(inst, x, tol);
  view.attraction.assign(x.size(), {});
  view.natural_blocks.assign(x.size(), {});
  for (std::size_t i = 0; i < view.active.size(); ++i) {
    for (std::size_t l : view.active[i]) view.attraction[l].push_back(i);
    // A_l = A[x_l] minus earlier blocks: the first active center claims a_i.
    view.natural_blocks[view.active[i].front()].push_back(i);
  }
  return view;
}

}  // namespace kcenter
