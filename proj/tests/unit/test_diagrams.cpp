#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "trainlab/canonical.hpp"

using namespace th;

namespace {

using EdgeKey = std::tuple<int, int, int, int, int>;

auto node_key(const Node& n) { return std::make_tuple(n.is_tag, n.sign, n.smell, n.level, n.label); }

std::vector<EdgeKey> edge_keys(const Graph& g, const std::vector<int>& relabel) {
  std::vector<EdgeKey> out;
  for (const auto& e : g.edges)
    out.emplace_back(relabel[static_cast<std::size_t>(e.plus)], relabel[static_cast<std::size_t>(e.minus)], e.color,
                     e.mel_plus, e.mel_minus);
  std::sort(out.begin(), out.end());
  return out;
}

// Tries every node bijection a -> b preserving node attributes.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  std::vector<int> id(a.nodes.size());
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_keys(b, id);
  std::vector<int> perm = id;
  do {
    bool ok = true;
    for (std::size_t n = 0; n < perm.size() && ok; ++n)
      ok = node_key(a.nodes[n]) == node_key(b.nodes[static_cast<std::size_t>(perm[n])]);
    if (ok && edge_keys(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  Graph out;
  out.nodes.resize(g.nodes.size());
  for (std::size_t n = 0; n < perm.size(); ++n) out.nodes[static_cast<std::size_t>(perm[n])] = g.nodes[n];
  for (auto e : g.edges) {
    e.plus = perm[static_cast<std::size_t>(e.plus)];
    e.minus = perm[static_cast<std::size_t>(e.minus)];
    out.edges.push_back(e);
  }
  rng.shuffle(out.edges);
  return out;
}

std::string cert(const Graph& g) { return graph_certificate(canonical_relabel(g)); }

}  // namespace

TEST_CASE("encode of the identity is all envelopes, projecting to nothing") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{1, 2}, {1, 0}}, {}, kind, 3);
    const auto raw = encode(cfg, GroupElement(), mi({0, 0}), mi({0, 0}));
    const auto comps = raw.graph.components();
    CHECK(comps.size() == 6);
    for (const auto& c : comps) {
      const auto sub = raw.graph.induced(c);
      REQUIRE(sub.nodes.size() == 2);
      CHECK(sub.nodes[0].level == sub.nodes[1].level);
      for (const auto& e : sub.edges) CHECK(e.mel_plus == e.mel_minus);
      CHECK(is_removable(kind, sub));
    }
    CHECK(project(cfg, raw).empty());
    CHECK(canon_certificate(project(cfg, raw)) == "[]");
  }
}

TEST_CASE("melody swap on chips: encoding and projection by kind") {
  const auto w = make_cfg({{2}}, {}, Kind::Wreath, 3);
  const auto g = swap(R(1, 1, 1, 1), R(1, 1, 1, 2));
  const auto raw = encode(w, g, mi({0}), mi({0}));
  int crossed = 0;
  for (const auto& c : raw.graph.components()) {
    const auto sub = raw.graph.induced(c);
    CHECK(sub.nodes.size() == 2);
    for (const auto& e : sub.edges) crossed += e.mel_plus != e.mel_minus;
  }
  CHECK(crossed == 2);
  CHECK(project(w, raw).empty());
  CHECK(is_in_k(w, mi({0}), g));

  const auto p = w.with_kind(Kind::Plain);
  const auto d = project(p, encode(p, g, mi({0}), mi({0})));
  REQUIRE(d.components.size() == 1);
  const auto& comp = d.components[0];
  CHECK(comp.vertex_count() == 2);
  CHECK(comp.tag_count() == 0);
  std::vector<std::pair<int, int>> mel;
  for (const auto& e : comp.graph.edges) mel.emplace_back(e.mel_plus, e.mel_minus);
  std::sort(mel.begin(), mel.end());
  CHECK(mel == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK(d.certificate != "[]");
}

TEST_CASE("crossed vs matched plain envelopes differ") {
  const auto cfg = make_cfg({{2}}, {}, Kind::Plain);
  auto env = [](bool crossed) {
    Graph g;
    const int a = g.add_node(Node::vertex(Sign::Plus, 1));
    const int b = g.add_node(Node::vertex(Sign::Minus, 1));
    g.edges.push_back({a, b, 1, 1, crossed ? 2 : 1});
    g.edges.push_back({a, b, 1, 2, crossed ? 1 : 2});
    return g;
  };
  CHECK(cert(env(true)) != cert(env(false)));
  CHECK(is_removable(Kind::Plain, env(false)));
  CHECK_FALSE(is_removable(Kind::Plain, env(true)));
  CHECK(is_removable(Kind::Wreath, env(true)));
  CHECK(canonicalize(cfg, env(false)).empty());
  CHECK_FALSE(canonicalize(cfg, env(true)).empty());
}

TEST_CASE("decode inverts encode") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{0, 2}, {1, 1}, {3, 0}}, {1, 0, 2}, kind, 5);
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
      const auto a = mi({static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))});
      const auto b = mi({static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3))});
      const auto g = random_element(cfg, 3, rng);
      CHECK(decode(cfg, encode(cfg, g, a, b)) == g);
    }
  }
}

TEST_CASE("canonical labeling agrees with a brute-force isomorphism test") {
  // small components drawn from random cosets, plus shuffled copies
  const auto cfg = make_cfg({{1, 1}, {1, 0}}, {1, 0}, Kind::Plain, 5);
  Rng rng(4);
  std::vector<Graph> pool;
  for (int t = 0; t < 400 && pool.size() < 60; ++t) {
    const auto a = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
    const auto b = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
    const auto raw = encode(cfg, random_element(cfg, 2, rng), a, b);
    for (const auto& c : raw.graph.components()) {
      auto sub = raw.graph.induced(c);
      for (auto& n : sub.nodes) n.level = 0;
      if (sub.nodes.size() >= 2 && sub.nodes.size() <= 6) pool.push_back(sub);
    }
  }
  REQUIRE(pool.size() >= 30);
  int iso_pairs = 0;
  for (std::size_t x = 0; x < pool.size(); ++x) {
    const auto copy = shuffled(pool[x], rng);
    CHECK(brute_isomorphic(pool[x], copy));
    CHECK(cert(pool[x]) == cert(copy));
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      const bool iso = brute_isomorphic(pool[x], pool[y]);
      iso_pairs += iso;
      CHECK(iso == (cert(pool[x]) == cert(pool[y])));
    }
  }
  CHECK(iso_pairs > 0);
}

TEST_CASE("certificate is invariant under relabeling") {
  const auto cfg = make_cfg({{2, 1}}, {}, Kind::Plain, 5);
  Rng rng(9);
  const auto g = random_element(cfg, 3, rng);
  const auto raw = encode(cfg, g, mi({1, 0}), mi({0, 1}));
  Graph forgot = raw.graph;
  for (auto& n : forgot.nodes) n.level = 0;
  const auto ref = canonicalize(cfg, forgot).certificate;
  for (int t = 0; t < 100; ++t) CHECK(canonicalize(cfg, shuffled(forgot, rng)).certificate == ref);
}

TEST_CASE("coset_of is a double-coset invariant") {
  for (Kind kind : {Kind::Wreath, Kind::Plain}) {
    const auto cfg = make_cfg({{1, 2}, {2, 0}}, {1, 0}, kind, 6);
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
      const auto a = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
      const auto b = mi({static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))});
      const auto g = random_element(cfg, 2, rng);
      const auto k1 = sample_k(cfg, b, 4, rng), k2 = sample_k(cfg, a, 4, rng);
      CHECK(coset_of(cfg, compose(compose(k1, g), k2), a, b) == coset_of(cfg, g, a, b));
      CHECK(coset_of(cfg, sample_k(cfg, a, 4, rng), a, a) == identity_morphism(cfg, a));
    }
  }
}

TEST_CASE("identity coset is tag-to-tag") {
  const auto cfg = make_cfg({{1, 2}}, {2}, Kind::Wreath, 4);
  const auto a = mi({1, 2});
  const auto m = coset_of(cfg, GroupElement(), a, a);
  CHECK(m.diagram.components.size() == omega_fixed(cfg, a).size());
  for (const auto& c : m.diagram.components) {
    REQUIRE(c.graph.nodes.size() == 2);
    CHECK(c.tag_count() == 2);
    CHECK(c.graph.nodes[0].label == c.graph.nodes[1].label);
  }
}

TEST_CASE("validate_coset_graph rejects malformed diagrams") {
  const auto cfg = make_cfg({{2}}, {}, Kind::Plain);
  Graph g;
  const int a = g.add_node(Node::vertex(Sign::Plus, 1));
  const int b = g.add_node(Node::vertex(Sign::Minus, 1));
  g.edges.push_back({a, b, 1, 1, 2});
  CHECK(error_of([&] { validate_coset_graph(cfg, g, mi({0}), mi({0})); }) == ErrorCode::MalformedDiagram);
  g.edges.push_back({a, b, 1, 2, 1});
  CHECK_NOTHROW(validate_coset_graph(cfg, g, mi({0}), mi({0})));
  CHECK(error_of([&] { validate_coset_graph(cfg, g, mi({1}), mi({0})); }) == ErrorCode::MalformedDiagram);
}
