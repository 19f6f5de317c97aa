#include "helpers.hpp"

using namespace th;

TEST_CASE("empty diagram and identity give one") {
  const auto cfg = make_cfg({{2, 1}}, {}, Kind::Plain, 6);
  const auto rp = random_rep(cfg, {2}, 3);
  const auto z = mi({0, 0});
  CHECK(std::abs(spherical_value(cfg, rp, identity_morphism(cfg, z)) - 1.0) < 1e-14);
  CHECK(std::abs(spherical_oracle(cfg, rp, GroupElement(), mi({1, 1})) - 1.0) < 1e-12);
}

TEST_CASE("Young transposition is |a12|^2") {
  const auto cfg = make_cfg({{1, 1}}, {}, Kind::Wreath, 6);
  const auto rp = random_rep(cfg, {3}, 12);
  const auto z = mi({0, 0});
  const auto m = coset_of(cfg, swap(R(1, 1, 1), R(1, 2, 1)), z, z);
  const double expected = std::norm(rp.xi[0].dot(rp.xi[1]));
  CHECK(std::abs(spherical_value(cfg, rp, m) - expected) < 1e-12);
  const auto sv = spherical_components(cfg, rp, m);
  CHECK(sv.per_component.size() == 2);
}

TEST_CASE("crossed chip 2-cycle contracts the matrix of xi") {
  const auto cfg = make_cfg({{2}}, {}, Kind::Plain, 6);
  const auto rp = random_rep(cfg, {3}, 4);
  const int d = 3;
  // <swap xi, xi> = sum_ab xi[b, a] conj(xi[a, b])
  cd expected = 0.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) expected += rp.xi[0](b * d + a) * std::conj(rp.xi[0](a * d + b));
  const auto m = coset_of(cfg, swap(R(1, 1, 1, 1), R(1, 1, 1, 2)), mi({0}), mi({0}));
  CHECK(std::abs(spherical_value(cfg, rp, m) - expected) < 1e-12);
  CHECK(std::abs(chip_trace_spherical(cfg, rp, m) - expected) < 1e-12);
}

TEST_CASE("value matches the dense oracle, both kinds") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{2, 1}, {1, 0}}, {}, kind, 8);
    const auto rp = random_rep(cfg, {2, 2}, 14);
    const auto z = mi({0, 0});
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
      const auto g = random_element(cfg, 2, rng);
      const cd oracle = spherical_oracle(cfg, rp, g, support_window(cfg, g, z));
      CHECK(std::abs(spherical_value(cfg, rp, coset_of(cfg, g, z, z), true) - oracle) < 1e-10);
      const auto g2 = compose(compose(sample_k(cfg, z, 2, rng), g), sample_k(cfg, z, 2, rng));
      CHECK(std::abs(spherical_oracle(cfg, rp, g2, support_window(cfg, g2, z)) - oracle) < 1e-10);
    }
  }
}

TEST_CASE("chip traces equal the contraction") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{2, 2}}, {}, kind, 8);
    const auto rp = random_rep(cfg, {2}, 15);
    const auto z = mi({0, 0});
    Rng rng(6);
    for (int t = 0; t < 60; ++t) {
      const auto m = coset_of(cfg, random_element(cfg, 3, rng), z, z);
      CHECK(std::abs(chip_trace_spherical(cfg, rp, m) - spherical_value(cfg, rp, m)) < 1e-12);
    }
  }
}

TEST_CASE("Gram parameterization") {
  const auto cfg = make_cfg({{1, 1, 1}}, {}, Kind::Plain, 6);
  Mat a(3, 3);
  a << 1.0, cd(0.3, 0.2), 0.1, cd(0.3, -0.2), 1.0, cd(0.0, 0.4), 0.1, cd(0.0, -0.4), 1.0;
  const GramSpec gram{a};
  const auto rp = gram_realization(cfg, gram);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      CHECK(std::abs(rp.xi[static_cast<std::size_t>(l)].dot(rp.xi[static_cast<std::size_t>(k)]) - a(k, l)) < 1e-12);

  const auto z = mi({0, 0, 0});
  CHECK(std::abs(gram_spherical(cfg, gram, identity_morphism(cfg, z)) - 1.0) < 1e-14);
  const auto m = coset_of(cfg, swap(R(1, 1, 1), R(1, 2, 1)), z, z);
  CHECK(std::abs(gram_spherical(cfg, gram, m) - std::norm(a(0, 1))) < 1e-12);
  Rng rng(7);
  for (int t = 0; t < 40; ++t) {
    const auto mm = coset_of(cfg, random_element(cfg, 3, rng), z, z);
    CHECK(std::abs(gram_spherical(cfg, gram, mm) - spherical_value(cfg, rp, mm)) < 1e-10);
  }

  // rank one: all eta equal up to phase, so every closed value has modulus 1
  Mat one = Mat::Ones(3, 3);
  const auto r1 = gram_realization(cfg, GramSpec{one});
  CHECK(std::abs(std::abs(spherical_value(cfg, r1, m)) - 1.0) < 1e-10);

  Mat bad = Mat::Identity(3, 3);
  bad(0, 1) = bad(1, 0) = 2.0;
  CHECK(error_of([&] { validate_gram(GramSpec{bad}, 3); }) == ErrorCode::NotPSD);
  bad = Mat::Identity(3, 3) * 2.0;
  CHECK(error_of([&] { validate_gram(GramSpec{bad}, 3); }) == ErrorCode::NotPSD);
  CHECK(error_of([&] { validate_gram(GramSpec{Mat::Identity(2, 2)}, 3); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("closedness preconditions") {
  const auto cfg = make_cfg({{2}}, {}, Kind::Plain, 6);
  const auto rp = random_rep(cfg, {2}, 1);
  CHECK(error_of([&] { spherical_value(cfg, rp, identity_morphism(cfg, mi({1}))); }) == ErrorCode::NotClosed);
  const auto lam = make_cfg({{2}}, {1}, Kind::Plain, 6);
  const auto rl = random_rep(lam, {2}, 1);
  CHECK(error_of([&] { spherical_value(lam, rl, identity_morphism(lam, mi({0}))); }) == ErrorCode::LambdaNonzero);
}
