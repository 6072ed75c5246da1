#include "kcenter/qualitative.hpp"

#include "kcenter/error.hpp"
#include "kcenter/k_center.hpp"
#include "kcenter/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace kcenter {

std::string_view to_string(LocalVerdict verdict) {
  return verdict == LocalVerdict::CertifiedLocal ? "certified_local" : "not_certified";
}

std::string_view to_string(Compactness verdict) {
  switch (verdict) {
    case Compactness::Compact: return "compact";
    case Compactness::Noncompact: return "noncompact";
    case Compactness::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

LocalCertificate certify_local(const Instance& inst, const CenterConfiguration& x, double tol_1c) {
  const Eigen::MatrixXd table = distance_table(inst, x);
  LocalCertificate cert;
  cert.value = table.rowwise().minCoeff().maxCoeff();
  cert.margin = std::numeric_limits<double>::infinity();
  cert.singleton_ok = true;
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    Eigen::Index nearest = 0;
    const double best = table.row(i).minCoeff(&nearest);
    for (Eigen::Index l = 0; l < table.cols(); ++l) {
      if (l == nearest) continue;
      const double gap = table(i, l) - best;
      cert.margin = std::min(cert.margin, gap);
      if (gap <= kCertificateTieGap) cert.singleton_ok = false;
    }
  }
  const double lipschitz = inst.gauge().constants().polar_norm;
  cert.stability_radius = cert.singleton_ok ? cert.margin / (2.0 * lipschitz) : 0.0;

  cert.recenter_ok = true;
  const auto attraction = attraction_sets(inst, x, 0.0);
  cert.per_center.resize(x.size());
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (attraction[l].empty()) continue;
    std::vector<Vector> pts;
    for (std::size_t i : attraction[l]) pts.push_back(inst.point(i));
    const OneCenterResult best = solve_one_center(inst.gauge(), pts, tol_1c);
    const double own = covering_radius(inst.gauge(), x[l], pts);
    cert.per_center[l] = {true, own - best.radius};
    if (own > best.radius + tol_1c) cert.recenter_ok = false;
  }
  cert.verdict = cert.singleton_ok && cert.recenter_ok ? LocalVerdict::CertifiedLocal
                                                       : LocalVerdict::NotCertified;
  return cert;
}

CompactnessVerdict compactness_diagnostic(const Instance& inst, std::size_t k, double eps,
                                          bool force) {
  if (k < 2 || inst.size() <= k) {
    throw Error(ErrorCode::HypothesisViolated, "compactness criterion needs m > k >= 2 (m = " +
                                                   std::to_string(inst.size()) +
                                                   ", k = " + std::to_string(k) + ")");
  }
  const ExactOptions options{eps, force};
  CompactnessVerdict out;
  out.k = k;
  out.v_k = exact_by_partition(inst, k, options).value;
  out.v_km1 = exact_by_partition(inst, k - 1, options).value;
  out.gap = out.v_km1 - out.v_k;
  out.tolerance = 10.0 * eps;
  if (out.gap > out.tolerance) {
    out.verdict = Compactness::Compact;
  } else if (std::abs(out.gap) <= out.tolerance) {
    out.verdict = Compactness::Noncompact;
  } else {
    out.verdict = Compactness::Inconclusive;
  }
  return out;
}

bool unbounded_ray_probe(const Instance& inst, const CenterConfiguration& x, std::size_t free_center,
                         std::span<const double> scales, const std::optional<Vector>& direction) {
  check_configuration(inst, x);
  if (free_center >= x.size()) {
    throw Error(ErrorCode::BadIndex, "center " + std::to_string(free_center + 1) + " out of range");
  }
  if (!attraction_sets(inst, x, 0.0)[free_center].empty()) {
    throw Error(ErrorCode::CenterIsAttractive,
                "center " + std::to_string(free_center + 1) + " attracts demand points");
  }
  Vector u = Vector::Unit(inst.dimension(), 0);
  if (direction) {
    if (direction->size() != inst.dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "probe direction has the wrong dimension");
    }
    u = *direction;
  }
  const double base = objective(inst, x);
  CenterConfiguration moved = x;
  for (double s : scales) {
    moved[free_center] = x[free_center] + s * u;
    if (std::abs(objective(inst, moved) - base) > 1e-12) return false;
  }
  return true;
}

ProbeOutcome perturbation_probe(const Instance& inst, const CenterConfiguration& x, double radius,
                                long samples, std::uint64_t seed) {
  check_configuration(inst, x);
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidParameter, "probe radius must be positive");
  if (samples < 1) throw Error(ErrorCode::InvalidParameter, "at least one sample is required");

  ProbeOutcome out;
  out.base_value = objective(inst, x);
  out.best_value = out.base_value;
  CenterConfiguration trial = x;
  for (long s = 0; s < samples; ++s) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    for (std::size_t l = 0; l < x.size(); ++l) {
      trial[l] = x[l] + random_in_ball(rng, inst.dimension(), radius);
    }
    const double value = objective(inst, trial);
    if (value < out.base_value - 1e-12 && value < out.best_value) {
      out.best_value = value;
      out.improvement_found = true;
      out.witness = trial;
      out.sample_index = s;
    }
  }
  return out;
}

}  // namespace kcenter
