#include "helpers.hpp"

using namespace th;

TEST_CASE("validate_config accepts the bundled shapes") {
  CHECK_NOTHROW(make_cfg({{0, 0, 1}, {1, 5, 1}, {2, 0, 4}, {4, 2, 1}}, {}, Kind::Wreath, 3));
  CHECK_NOTHROW(make_cfg({{2, 2, 2}}));
  CHECK(make_cfg({{1}, {1}, {1}}).q() == 3);
}

TEST_CASE("validate_config names the broken invariant") {
  CHECK(error_of([] { make_cfg({{1, 0}, {0, 0}}); }) == ErrorCode::ZeroRow);
  CHECK(error_of([] { make_cfg({{1, 0}, {1, 0}}); }) == ErrorCode::ZeroColumn);
  CHECK(error_of([] { make_cfg({{1, -1}, {1, 1}}); }) == ErrorCode::NegativeEntry);
  CHECK(error_of([] { make_cfg({{1}}, {-1}); }) == ErrorCode::NegativeEntry);
  CHECK(error_of([] { make_cfg({{1}}, {}, Kind::Wreath, 0); }).has_value());
  RawConfig r;
  r.q = 2;
  r.p = 1;
  r.Z = {{1}};
  r.Lambda = {0, 0};
  r.trunc = 2;
  CHECK(error_of([&] { validate_config(r); }).has_value());
}

TEST_CASE("omega_fixed sizes") {
  CHECK(omega_fixed(make_cfg({{2}}), mi({0})).empty());

  const auto one = omega_fixed(make_cfg({{2}}, {1}), mi({1}));
  REQUIRE(one.size() == 3);
  CHECK(one[0] == GroundPoint::L(1, 1));
  CHECK(one[1] == R(1, 1, 1, 1));
  CHECK(one[2] == R(1, 1, 1, 2));

  // count by the formula sum(Lambda) + sum_i alpha_i sum_j zeta_ji
  const std::vector<std::vector<int>> Z = {{0, 0, 1}, {1, 5, 1}, {2, 0, 4}, {4, 2, 1}};
  const std::vector<int> alpha = {1, 1, 1};
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& row : Z) expected += static_cast<std::size_t>(alpha[i] * row[i]);
  // column sums 7 + 7 + 7
  CHECK(expected == 21);
  CHECK(omega_fixed(make_cfg(Z, {}, Kind::Wreath, 3), mi(alpha)).size() == expected);
}

TEST_CASE("enumerate_omega counts and order") {
  CHECK(enumerate_omega(make_cfg({{1, 1}}, {}, Kind::Wreath, 2)).size() == 4);
  CHECK(enumerate_omega(make_cfg({{2}}, {1}, Kind::Wreath, 2)).size() == 5);
  CHECK(enumerate_omega(make_cfg({{1}, {1}, {1}}, {}, Kind::Wreath, 3)).size() == 9);

  const auto all = enumerate_omega(make_cfg({{0, 0, 1}, {1, 5, 1}, {2, 0, 4}, {4, 2, 1}}, {2, 0, 1, 0}, Kind::Plain, 3));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.front() == GroundPoint::L(1, 1));
  // zeta_11 = 0: no regular point of color 1 over smell 1
  for (const auto& p : all) CHECK(!(p.color == 1 && !p.exceptional && p.smell == 1));
}

TEST_CASE("window enumeration and fixed sets") {
  const auto cfg = make_cfg({{1, 2}}, {1}, Kind::Wreath, 5);
  const auto w = enumerate_window(cfg, mi({2, 1}));
  CHECK(w.size() == 1 + 2 * 1 + 1 * 2);
  CHECK(in_fixed_set(R(1, 1, 2), mi({2, 0})));
  CHECK_FALSE(in_fixed_set(R(1, 1, 3), mi({2, 0})));
  CHECK(in_fixed_set(GroundPoint::L(1, 1), mi({0, 0})));
  CHECK(contains(cfg, R(1, 2, 5, 2)));
  CHECK_FALSE(contains(cfg, R(1, 2, 6, 2)));
  CHECK_FALSE(contains(cfg, R(1, 1, 1, 2)));
}

TEST_CASE("slots follow (color, melody) order") {
  const auto cfg = make_cfg({{1, 0}, {2, 1}});
  const auto s = cfg.slots(1);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == std::make_pair(1, 1));
  CHECK(s[2] == std::make_pair(2, 2));
  CHECK(cfg.slot_position(1, 2, 1) == 1);
  CHECK(cfg.block_size(2) == 1);
}
