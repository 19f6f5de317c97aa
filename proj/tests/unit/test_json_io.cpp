#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace th;

TEST_CASE("multi-index literals") {
  CHECK(parse_multi_index("0", 3) == mi({0, 0, 0}));
  CHECK(parse_multi_index("1,0,2", 3) == mi({1, 0, 2}));
  CHECK(error_of([] { parse_multi_index("1,x", 2); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_multi_index("1.5", 1); }) == ErrorCode::ParseError);
}

TEST_CASE("config roundtrip and errors") {
  const auto cfg = make_cfg({{0, 0, 1}, {1, 5, 1}, {2, 0, 4}, {4, 2, 1}}, {1, 0, 0, 2}, Kind::Plain, 5);
  CHECK(config_from_json(to_json(cfg)) == cfg);
  CHECK(error_of([] { config_from_json(json::parse(R"({"q":1,"p":1,"Z":[[1]],"Lambda":[0],"kind":"x","trunc":2})")); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { config_from_json(json::parse(R"({"q":1,"p":1,"Z":[[1]],"Lambda":[0],"kind":"plain"})")); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { config_from_json(json::parse(R"({"q":2,"p":1,"Z":[[1],[0]],"Lambda":[0,0],"kind":"plain","trunc":2})")); }) ==
        ErrorCode::ZeroRow);
}

TEST_CASE("points and elements") {
  const auto l = GroundPoint::L(2, 3);
  CHECK(point_from_json(to_json(l)) == l);
  CHECK(point_from_json(json::parse(R"({"j":1,"t":"R","i":2,"k":3,"m":1})")) == R(1, 2, 3, 1));
  const auto cfg = make_cfg({{1, 2}, {2, 1}}, {1, 1}, Kind::Wreath, 5);
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_element(cfg, 3, rng);
    CHECK(element_from_json(to_json(g)) == g);
  }
  CHECK(error_of([] { point_from_json(json::parse(R"({"j":1,"t":"Q"})")); }) == ErrorCode::ParseError);
}

TEST_CASE("morphism roundtrip") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{1, 2}, {2, 1}}, {1, 0}, kind, 6);
    Rng rng(2);
    for (int t = 0; t < 40; ++t) {
      const auto a = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
      const auto b = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
      const auto m = coset_of(cfg, random_element(cfg, 2, rng), a, b);
      const auto back = morphism_from_json(cfg, json::parse(to_json(m).dump()));
      CHECK(back == m);
    }
  }
}

TEST_CASE("malformed morphism documents") {
  const auto cfg = make_cfg({{2}}, {}, Kind::Plain, 4);
  const auto bad_slot = json::parse(R"({"source":[0],"target":[0],"components":[{"vertices":[{"sign":"+","smell":1},
      {"sign":"-","smell":1}],"tags":[],"edges":[{"from":{"v":0},"to":{"v":5},"color":1,"mel+":1,"mel-":1}]}]})");
  CHECK(error_of([&] { morphism_from_json(cfg, bad_slot); }) == ErrorCode::ParseError);
  const auto unused = json::parse(R"({"source":[0],"target":[0],"components":[{"vertices":[{"sign":"+","smell":1},
      {"sign":"-","smell":1}],"tags":[],"edges":[{"from":{"v":0},"to":{"v":1},"color":1,"mel+":1,"mel-":2}]}]})");
  CHECK(error_of([&] { morphism_from_json(cfg, unused); }) == ErrorCode::MalformedDiagram);
}

TEST_CASE("rep roundtrip") {
  const auto cfg = make_cfg({{2, 1}}, {1}, Kind::Wreath, 4);
  const auto rp = random_rep(cfg, {3}, 9);
  const auto back = rep_from_json(cfg, json::parse(to_json(rp).dump()));
  REQUIRE(back.xi.size() == rp.xi.size());
  for (std::size_t i = 0; i < rp.xi.size(); ++i) CHECK((back.xi[i] - rp.xi[i]).norm() < 1e-15);
  CHECK(back.exceptional.size() == 1);
  auto j = to_json(rp);
  j["xi"][0]["coords"][0] = json::array({5.0, 0.0});
  CHECK(error_of([&] { rep_from_json(cfg, j); }) == ErrorCode::InvalidRepParams);
}

TEST_CASE("files") {
  CHECK(error_of([] { load_json("/nonexistent/x.json"); }) == ErrorCode::ParseError);
  const std::string path = "trainlab_bad.json";
  std::ofstream(path) << "{ not json";
  CHECK(error_of([&] { load_json(path); }) == ErrorCode::ParseError);
  std::remove(path.c_str());
}

TEST_CASE("report document") {
  CheckResult ok("a"), bad("b");
  ok.pass();
  bad.fail("why");
  bad.residual(0.5, 0.1);
  const auto j = to_json(std::vector<CheckResult>{ok, bad});
  CHECK(j["ok"] == false);
  CHECK(j["checks"][1]["failed"] == 2);
  CHECK(j["checks"][1]["max_residual"] == 0.5);
}
