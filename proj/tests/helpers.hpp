#pragma once

#include "kcenter/error.hpp"
#include "kcenter/gauge.hpp"
#include "kcenter/instance.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kcenter::testing {

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index c = 0;
  for (double x : xs) v[c++] = x;
  return v;
}

inline std::vector<Vector> pts(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(vec(r));
  return out;
}

inline CenterConfiguration cfg(std::initializer_list<std::initializer_list<double>> rows) {
  return CenterConfiguration{pts(rows)};
}

inline std::vector<Vector> square_corners() { return pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

inline Instance euclid(std::vector<Vector> p) {
  const int d = static_cast<int>(p.front().size());
  return Instance(validate_gauge(shape::Euclidean{}, d), std::move(p));
}

inline Instance linf(std::vector<Vector> p) {
  const int d = static_cast<int>(p.front().size());
  return Instance(validate_gauge(shape::LInf{}, d), std::move(p));
}

/// The code of the kcenter::Error thrown by f, if any.
template <class F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::string fixture(const std::string& name) { return std::string(KCENTER_FIXTURES) + "/" + name; }

}  // namespace kcenter::testing
