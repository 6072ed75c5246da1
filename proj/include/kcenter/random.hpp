#pragma once

// Seeded sampling with results that depend only on the seed: std::mt19937_64
// output is fixed by the standard, the distributions built on it here are too.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>

namespace kcenter {

/// splitmix64 finalizer; derives an independent stream seed for item `index`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform on [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Box-Muller.
inline double standard_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Eigen::VectorXd random_unit_vector(std::mt19937_64& rng, Eigen::Index d) {
  Eigen::VectorXd v(d);
  do {
    for (Eigen::Index c = 0; c < d; ++c) v[c] = standard_normal(rng);
  } while (v.norm() == 0.0);
  return v.normalized();
}

/// Uniform in the closed Euclidean ball of the given radius.
inline Eigen::VectorXd random_in_ball(std::mt19937_64& rng, Eigen::Index d, double radius) {
  const Eigen::VectorXd dir = random_unit_vector(rng, d);
  return dir * (radius * std::pow(uniform01(rng), 1.0 / static_cast<double>(d)));
}

}  // namespace kcenter
