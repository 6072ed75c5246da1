#include "kcenter/k_center.hpp"

#include "kcenter/error.hpp"
#include "kcenter/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <unordered_map>

namespace kcenter {

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::ExactPartition: return "exact_partition";
    case SolveMethod::Alternating: return "alternating";
    case SolveMethod::MultiStart: return "multi_start";
  }
  return "unknown";
}

namespace {

std::vector<Vector> gather(const Instance& inst, const IndexSet& block) {
  std::vector<Vector> pts;
  pts.reserve(block.size());
  for (std::size_t i : block) pts.push_back(inst.point(i));
  return pts;
}

IndexSet members(std::uint64_t mask) {
  IndexSet out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

class PartitionSearch {
 public:
  PartitionSearch(const Instance& inst, std::size_t k, double eps)
      : inst_(inst), k_(k), eps_(eps) {}

  void run() {
    blocks_.clear();
    radii_.clear();
    descend(0);
  }

  double best_value() const { return best_value_; }
  const std::vector<std::uint64_t>& best_blocks() const { return best_blocks_; }
  long leaves() const { return leaves_; }

  const OneCenterResult& block(std::uint64_t mask) {
    auto it = cache_.find(mask);
    if (it == cache_.end()) {
      const auto pts = gather(inst_, members(mask));
      it = cache_.emplace(mask, solve_one_center(inst_.gauge(), pts, eps_)).first;
      if (!it->second.converged) {
        throw Error(ErrorCode::NonConvergence,
                    "block 1-center did not converge (gap " + std::to_string(it->second.accuracy) + ")");
      }
    }
    return it->second;
  }

 private:
  void descend(std::size_t i) {
    if (i == inst_.size()) {
      ++leaves_;
      const double value = *std::max_element(radii_.begin(), radii_.end());
      if (value < best_value_) {
        best_value_ = value;
        best_blocks_ = blocks_;
      }
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    const std::size_t open = blocks_.size();
    for (std::size_t b = 0; b <= open && b < k_; ++b) {
      if (b == open) {
        blocks_.push_back(0);
        radii_.push_back(0.0);
      }
      const std::uint64_t saved_mask = blocks_[b];
      const double saved_radius = radii_[b];
      blocks_[b] |= bit;
      radii_[b] = block(blocks_[b]).radius;
      const double partial = *std::max_element(radii_.begin(), radii_.end());
      // Adding points never shrinks a block radius, so no completion of this
      // prefix can beat the incumbent.
      if (partial < best_value_) descend(i + 1);
      blocks_[b] = saved_mask;
      radii_[b] = saved_radius;
      if (b == open) {
        blocks_.pop_back();
        radii_.pop_back();
      }
    }
  }

  const Instance& inst_;
  std::size_t k_;
  double eps_;
  std::vector<std::uint64_t> blocks_;
  std::vector<double> radii_;
  std::unordered_map<std::uint64_t, OneCenterResult> cache_;
  double best_value_ = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> best_blocks_;
  long leaves_ = 0;
};

CenterConfiguration random_init(const Instance& inst, std::size_t k, std::mt19937_64& rng) {
  const std::size_t m = inst.size();
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  const std::size_t draw = std::min(k, m);
  for (std::size_t i = 0; i < draw; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (m - i));
    std::swap(idx[i], idx[j]);
  }
  CenterConfiguration x;
  for (std::size_t l = 0; l < k; ++l) x.centers.push_back(inst.point(idx[l < draw ? l : 0]));
  return x;
}

}  // namespace

CenterConfiguration clamp_centers(const Instance& inst, const CenterConfiguration& x,
                                  std::size_t anchor) {
  if (anchor >= inst.size()) {
    throw Error(ErrorCode::BadIndex, "anchor index " + std::to_string(anchor + 1) + " out of range");
  }
  check_configuration(inst, x);
  const auto& a0 = inst.point(anchor);
  double rho = 0.0;
  for (const auto& p : inst.points()) rho = std::max(rho, inst.gauge()(a0 - p));
  const auto& k = inst.gauge().constants();
  const double threshold = (1.0 + k.set_norm * k.polar_norm) * rho;

  CenterConfiguration out = x;
  for (auto& c : out.centers) {
    if (inst.gauge()(c - a0) > threshold) c = a0;
  }
  return out;
}

SolveReport exact_by_partition(const Instance& inst, std::size_t k, const ExactOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be at least 1");
  const std::size_t m = inst.size();
  if (!options.force && (m > kMaxExactPoints || k > kMaxExactCenters)) {
    throw Error(ErrorCode::TooLarge, "exact enumeration is limited to m <= " +
                                         std::to_string(kMaxExactPoints) + " and k <= " +
                                         std::to_string(kMaxExactCenters) + " (got m = " +
                                         std::to_string(m) + ", k = " + std::to_string(k) + ")");
  }
  if (m > 63) throw Error(ErrorCode::TooLarge, "exact enumeration needs m < 64");

  PartitionSearch search(inst, k, options.eps);
  search.run();

  SolveReport report;
  report.method = SolveMethod::ExactPartition;
  report.value = search.best_value();
  report.iterations = search.leaves();
  std::vector<IndexSet> blocks;
  for (std::uint64_t mask : search.best_blocks()) {
    const auto& solved = search.block(mask);
    report.centers.centers.push_back(solved.center);
    report.accuracy += solved.accuracy;
    blocks.push_back(members(mask));
  }
  while (report.centers.size() < k) {
    report.centers.centers.push_back(report.centers.centers.front());
    blocks.emplace_back();
  }
  report.partition = std::move(blocks);
  return report;
}

SolveReport alternating_heuristic(const Instance& inst, const CenterConfiguration& init,
                                  const HeuristicOptions& options) {
  check_configuration(inst, init);
  SolveReport report;
  report.method = SolveMethod::Alternating;
  CenterConfiguration x = init;
  double value = objective(inst, x);
  report.trace.push_back(value);

  for (int round = 1; round <= options.max_rounds; ++round) {
    report.iterations = round;
    const ClusteringView view = natural_clustering(inst, x, options.tie_tolerance);
    CenterConfiguration next = x;
    for (std::size_t l = 0; l < x.size(); ++l) {
      const auto& block = view.natural_blocks[l];
      if (block.empty()) continue;
      const auto pts = gather(inst, block);
      const OneCenterResult solved = solve_one_center(inst.gauge(), pts, options.eps);
      // Keep the old center unless the block radius actually drops.
      if (solved.radius < covering_radius(inst.gauge(), x[l], pts)) next[l] = solved.center;
    }
    const double next_value = objective(inst, next);
    if (next_value > value) break;  // near-tie reassignment can only lose up to the tie tolerance
    const double gain = value - next_value;
    x = std::move(next);
    value = next_value;
    report.trace.push_back(value);
    if (gain < options.tol) break;
  }

  report.value = value;
  report.centers = x;
  report.partition = natural_clustering(inst, x, options.tie_tolerance).natural_blocks;
  return report;
}

CenterConfiguration farthest_point_init(const Instance& inst, std::size_t k) {
  CenterConfiguration x;
  x.centers.push_back(inst.point(0));
  std::vector<double> nearest(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) nearest[i] = inst.distance(x[0], i);
  while (x.size() < k) {
    const auto far = static_cast<std::size_t>(
        std::max_element(nearest.begin(), nearest.end()) - nearest.begin());
    x.centers.push_back(inst.point(far));
    for (std::size_t i = 0; i < inst.size(); ++i) {
      nearest[i] = std::min(nearest[i], inst.distance(x.centers.back(), i));
    }
  }
  return x;
}

SolveReport multi_start(const Instance& inst, std::size_t k, const MultiStartOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be at least 1");
  if (options.restarts < 1) throw Error(ErrorCode::InvalidParameter, "restarts must be at least 1");

  std::vector<CenterConfiguration> inits = options.extra_inits;
  inits.push_back(farthest_point_init(inst, k));
  std::mt19937_64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) inits.push_back(random_init(inst, k, rng));
  for (auto& init : inits) {
    if (init.size() != k) throw Error(ErrorCode::InvalidParameter, "initial configuration needs k centers");
    init = clamp_centers(inst, init, 0);
  }

  std::vector<std::optional<SolveReport>> runs(inits.size());
  std::vector<std::exception_ptr> failures(inits.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < inits.size(); r += stride) {
      try {
        runs[r] = alternating_heuristic(inst, inits[r], options.heuristic);
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::size_t best = 0;
  long rounds = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    rounds += runs[r]->iterations;
    if (runs[r]->value < runs[best]->value) best = r;
  }
  SolveReport report = std::move(*runs[best]);
  report.method = SolveMethod::MultiStart;
  report.iterations = rounds;
  report.seed = options.seed;
  return report;
}

Vector hyperplane_witness(std::span<const Vector> points, std::uint64_t seed) {
  if (points.empty()) throw Error(ErrorCode::EmptyInstance, "witness needs points");
  std::mt19937_64 rng(seed);
  const auto d = points.front().size();
  for (int draw = 0; draw < 1000; ++draw) {
    const Vector w = random_unit_vector(rng, d);
    const bool clear = std::all_of(points.begin(), points.end(), [&](const Vector& a) {
      return !(std::abs(a.dot(w)) < 1e-12 * a.norm());
    });
    if (clear) return w;
  }
  throw Error(ErrorCode::WitnessNotFound, "1000 draws hit a point; inputs look degenerate");
}

TwoCenterBound two_center_split_bound(std::span<const Vector> points, double eps1,
                                      std::uint64_t seed) {
  if (points.size() < 2) {
    throw Error(ErrorCode::DegenerateRadius, "a single point has 1-center radius 0");
  }
  const OneCenterResult one = one_center_euclidean(points, eps1);
  if (!(one.radius > 0.0)) throw Error(ErrorCode::DegenerateRadius, "1-center radius is 0");

  std::vector<Vector> shifted;
  shifted.reserve(points.size());
  for (const auto& p : points) shifted.push_back(p - one.center);

  TwoCenterBound out;
  out.one_center = one.center;
  out.r1 = one.radius;
  out.witness = hyperplane_witness(shifted, seed);
  out.epsilon_bar = std::numeric_limits<double>::infinity();
  for (const auto& a : shifted) {
    const double eps_i =
        a.isZero(0.0) ? out.r1 / std::sqrt(2.0) : std::abs(a.dot(out.witness)) / 2.0;
    out.epsilon_bar = std::min(out.epsilon_bar, eps_i);
  }
  out.bound = std::sqrt(out.r1 * out.r1 - out.epsilon_bar * out.epsilon_bar);
  out.centers.centers = {one.center + out.epsilon_bar * out.witness,
                         one.center - out.epsilon_bar * out.witness};

  double achieved = 0.0;
  for (const auto& p : points) {
    achieved = std::max(achieved, std::min((p - out.centers[0]).norm(), (p - out.centers[1]).norm()));
  }
  out.achieved = achieved;
  if (achieved > out.bound + eps1) {
    throw Error(ErrorCode::NonConvergence, "split centers do not achieve the bound");
  }
  return out;
}

}  // namespace kcenter
