#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kcenter;
using namespace kcenter::testing;

TEST_CASE("instance validation") {
  const Gauge e = validate_gauge(shape::Euclidean{}, 2);
  CHECK(error_code([&] { Instance(e, {}); }) == ErrorCode::EmptyInstance);
  CHECK(error_code([&] { Instance(e, pts({{0, 0}, {1}})); }) == ErrorCode::DimensionMismatch);
  CHECK(error_code([&] { Instance(e, pts({{0, NAN}})); }) == ErrorCode::InvalidParameter);
  try {
    Instance(e, pts({{0, 0}, {1, 0}, {0, 0}}));
    FAIL("duplicates accepted");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::DuplicatePoints);
    CHECK(std::string(err.what()).find('1') != std::string::npos);
    CHECK(std::string(err.what()).find('3') != std::string::npos);
  }
  const Instance ok = euclid(square_corners());
  CHECK(ok.size() == 4);
  CHECK(ok.dimension() == 2);
  CHECK(error_code([&] { check_configuration(ok, CenterConfiguration{}); }) == ErrorCode::InvalidParameter);
  CHECK(error_code([&] { check_configuration(ok, cfg({{1, 2, 3}})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("objective examples") {
  const Instance sq = euclid(square_corners());
  CHECK(objective(sq, cfg({{0.5, 0}, {0.5, 1}, {7, 7}})) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(objective(sq, CenterConfiguration{square_corners()}) == 0.0);
  const Instance line = euclid(pts({{0}, {1}, {10}}));
  CHECK(objective(line, cfg({{5}, {30}})) == 5.0);
  const Eigen::MatrixXd table = distance_table(line, cfg({{5}, {30}}));
  CHECK(table.rows() == 3);
  CHECK(table.cols() == 2);
  CHECK(table(2, 1) == 20.0);
}

TEST_CASE("dc components") {
  const Instance line = euclid(pts({{0}, {1}}));
  const auto one = dc_components(line, cfg({{0.25}}));
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(one.h[i] == 0.0);
    CHECK(one.h_parts[i][0] == 0.0);
  }
  CHECK(one.g[0] == 0.25);
  CHECK(one.g[1] == 0.75);

  const auto dc = dc_components(line, cfg({{0.5}, {3}}));
  CHECK(dc.g[0] == 3.5);
  CHECK(dc.h_parts[0][0] == 3.0);
  CHECK(dc.h_parts[0][1] == 0.5);
  CHECK(dc.h[0] == 3.0);
  CHECK(dc.g[0] - dc.h[0] == 0.5);
  CHECK(dc.value() == doctest::Approx(0.5));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Gauge g = random_gauge(rng, d);
    const Instance inst(g, random_points(rng, d, 2 + rng() % 8));
    const auto x = random_centers(rng, d, 1 + rng() % 4);
    const auto c = dc_components(inst, x);
    CHECK(std::abs(c.value() - objective(inst, x)) <= 1e-10);
    CHECK(std::abs(objective(inst, x) - brute_objective(g, inst.points(), x.centers)) <= 1e-12);
  }
}

TEST_CASE("active and attraction sets") {
  const Instance line = euclid(pts({{0}, {1}, {10}}));
  const auto active = active_sets(line, cfg({{5}, {30}}), 0.0);
  for (const auto& j : active) CHECK(j == IndexSet{0});
  const auto attraction = attraction_sets(line, cfg({{5}, {30}}), 0.0);
  CHECK(attraction[0] == IndexSet{0, 1, 2});
  CHECK(attraction[1].empty());

  const auto twin = active_sets(line, cfg({{3}, {3}}), 0.0);
  for (const auto& j : twin) CHECK(j == IndexSet{0, 1});

  const auto single = attraction_sets(line, cfg({{-4}}));
  CHECK(single[0] == IndexSet{0, 1, 2});

  const Instance tri = euclid(pts({{0, 0}, {1, 0}, {0, 1}}));
  const auto ta = attraction_sets(tri, cfg({{0.5, 0.5}, {-0.01, -0.01}}), 0.0);
  CHECK(ta[1] == IndexSet{0});
  CHECK(ta[0] == IndexSet{1, 2});

  CHECK(error_code([&] { active_sets(line, cfg({{0}}), -1.0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("natural clustering") {
  const Instance line = euclid(pts({{0}, {1}, {10}}));
  const auto ties = natural_clustering(line, cfg({{2}, {2}}));
  CHECK(ties.natural_blocks[0] == IndexSet{0, 1, 2});
  CHECK(ties.natural_blocks[1].empty());

  const auto split = natural_clustering(line, cfg({{0.5}, {10}}));
  CHECK(split.natural_blocks[0] == IndexSet{0, 1});
  CHECK(split.natural_blocks[1] == IndexSet{2});

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Instance inst(random_gauge(rng, d), random_points(rng, d, 2 + rng() % 8));
    const auto x = random_centers(rng, d, 1 + rng() % 4);
    const auto view = natural_clustering(inst, x);
    std::multiset<std::size_t> seen;
    for (const auto& block : view.natural_blocks) seen.insert(block.begin(), block.end());
    CHECK(seen.size() == inst.size());
    CHECK(std::set<std::size_t>(seen.begin(), seen.end()).size() == inst.size());
    // J_i = { l : a_i in A[x_l] }.
    for (std::size_t i = 0; i < inst.size(); ++i) {
      for (std::size_t l = 0; l < x.size(); ++l) {
        const bool in_active = std::count(view.active[i].begin(), view.active[i].end(), l) > 0;
        const bool in_attr = std::count(view.attraction[l].begin(), view.attraction[l].end(), i) > 0;
        CHECK(in_active == in_attr);
      }
    }
  }
}
