#pragma once

// Executable versions of the qualitative results on k-center solution sets:
// a sufficient local-optimality certificate, the compactness criterion
// (S_k compact iff min f_k < min f_{k-1} for m > k >= 2), and numerical
// probes for unbounded solution rays and local improvements.

#include "kcenter/instance.hpp"
#include "kcenter/one_center.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace kcenter {

enum class LocalVerdict { CertifiedLocal, NotCertified };
enum class Compactness { Compact, Noncompact, Inconclusive };

std::string_view to_string(LocalVerdict verdict);
std::string_view to_string(Compactness verdict);

/// Gaps at or below this count as ties in the singleton test.
inline constexpr double kCertificateTieGap = 1e-12;

struct CenterCheck {
  bool attractive = false;
  /// max over A[x_l] of rho(x_l - a_i) minus the block 1-center radius; 0 for
  /// non-attractive centers.
  double one_center_gap = 0.0;
};

struct LocalCertificate {
  LocalVerdict verdict = LocalVerdict::NotCertified;
  bool singleton_ok = false;
  bool recenter_ok = false;
  /// min over i and l outside J_i of rho(x_l - a_i) - rho(x_{l(i)} - a_i);
  /// +inf when k = 1.
  double margin = 0.0;
  /// margin / (2 ||F°||): moving every center by less than this keeps each
  /// J_i fixed, since rho_F is ||F°||-Lipschitz.
  double stability_radius = 0.0;
  double value = 0.0;
  std::vector<CenterCheck> per_center;
};

/// Certified when every J_i(x) is a singleton (runner-up gap above 1e-12)
/// and every attractive center is within tol_1c of the 1-center radius of its
/// attraction set. Not certified says nothing: the condition is sufficient.
LocalCertificate certify_local(const Instance& inst, const CenterConfiguration& x,
                               double tol_1c = kDefaultOneCenterEps);

struct CompactnessVerdict {
  Compactness verdict = Compactness::Inconclusive;
  double v_k = 0.0;
  double v_km1 = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  std::size_t k = 0;
};

/// Exact values v_k and v_{k-1}; compact when v_{k-1} - v_k > 10 eps,
/// noncompact when |v_{k-1} - v_k| <= 10 eps. Requires m > k >= 2
/// (HypothesisViolated) and the exact-solver guard unless `force`.
CompactnessVerdict compactness_diagnostic(const Instance& inst, std::size_t k,
                                          double eps = kDefaultOneCenterEps, bool force = false);

/// Slides center l (0-based) to x_l + s u for each s; true when the objective
/// stays within 1e-12 of its starting value. u defaults to e_1. Throws
/// CenterIsAttractive if A[x_l] (tolerance 0) is nonempty.
bool unbounded_ray_probe(const Instance& inst, const CenterConfiguration& x, std::size_t free_center,
                         std::span<const double> scales,
                         const std::optional<Vector>& direction = std::nullopt);

struct ProbeOutcome {
  bool improvement_found = false;
  double base_value = 0.0;
  double best_value = 0.0;
  std::optional<CenterConfiguration> witness;
  long sample_index = -1;
};

/// Seeded uniform perturbations of every center inside a Euclidean ball of
/// the given radius. Sample s draws from its own stream derive_seed(seed, s),
/// so batches can be split across threads without changing the result.
ProbeOutcome perturbation_probe(const Instance& inst, const CenterConfiguration& x, double radius,
                                long samples, std::uint64_t seed);

}  // namespace kcenter
