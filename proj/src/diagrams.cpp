#include "trainlab/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "trainlab/canonical.hpp"

namespace trainlab {
namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorCode::MalformedDiagram, msg); }

std::string node_str(const Graph& g, int id) {
  const auto& n = g.nodes[id];
  std::string s = "node " + std::to_string(id) + " (" + (n.sign == Sign::Plus ? "+" : "-");
  if (n.is_tag) return s + "tag " + n.label.str() + ")";
  return s + "smell " + std::to_string(n.smell) + (n.level ? " level " + std::to_string(n.level) : "") + ")";
}

// Shared structural checks. raw: levels and melodies present, full vertex set.
void check_graph(const PairConfig& cfg, const Graph& g, const MultiIndex& alpha, const MultiIndex& beta,
                 bool raw) {
  check_multi_index(cfg, alpha);
  check_multi_index(cfg, beta);
  const bool melodies = raw || cfg.kind() == Kind::Plain;
  const int n = static_cast<int>(g.nodes.size());

  std::set<GroundPoint> entry, exit;
  std::set<std::pair<int, int>> plus_levels, minus_levels;
  std::vector<int> plus_count(cfg.p() + 1, 0), minus_count(cfg.p() + 1, 0);
  for (int v = 0; v < n; ++v) {
    const auto& node = g.nodes[v];
    const auto& bound = node.sign == Sign::Plus ? alpha : beta;
    if (node.is_tag) {
      if (!contains(cfg, node.label)) malformed(node_str(g, v) + " has a label outside Omega");
      if (!in_fixed_set(node.label, bound)) malformed(node_str(g, v) + " is not a fixed point");
      auto& set = node.sign == Sign::Plus ? entry : exit;
      if (!set.insert(node.label).second) malformed(node_str(g, v) + " is duplicated");
      continue;
    }
    if (node.smell < 1 || node.smell > cfg.p()) malformed(node_str(g, v) + " has an invalid smell");
    (node.sign == Sign::Plus ? plus_count : minus_count)[node.smell]++;
    if (raw) {
      if (node.level <= bound[node.smell] || node.level > cfg.trunc())
        malformed(node_str(g, v) + " has a level outside the free range");
      auto& set = node.sign == Sign::Plus ? plus_levels : minus_levels;
      if (!set.emplace(node.smell, node.level).second) malformed(node_str(g, v) + " is duplicated");
    } else if (node.level != 0) {
      malformed(node_str(g, v) + " still carries a level");
    }
  }
  if (entry.size() != omega_fixed(cfg, alpha).size()) malformed("entry tags do not cover the source fixed set");
  if (exit.size() != omega_fixed(cfg, beta).size()) malformed("exit tags do not cover the target fixed set");
  if (raw) {
    for (int i = 1; i <= cfg.p(); ++i) {
      if (plus_count[i] != cfg.trunc() - alpha[i]) malformed("plus vertices of smell " + std::to_string(i) + " incomplete");
      if (minus_count[i] != cfg.trunc() - beta[i]) malformed("minus vertices of smell " + std::to_string(i) + " incomplete");
    }
  } else {
    for (int i = 1; i <= cfg.p(); ++i)
      if (plus_count[i] + alpha[i] != minus_count[i] + beta[i])
        malformed("vertex counts of smell " + std::to_string(i) + " do not balance");
  }

  // slot usage: (node, color, melody) -> count
  std::map<std::tuple<int, int, int>, int> used;
  auto use_slot = [&](int v, Sign expect, int color, int mel) {
    if (v < 0 || v >= n) malformed("edge endpoint " + std::to_string(v) + " out of range");
    const auto& node = g.nodes[v];
    if (node.sign != expect) malformed(node_str(g, v) + " is on the wrong side of an edge");
    if (color < 1 || color > cfg.q()) malformed("edge color " + std::to_string(color) + " out of range");
    if (node.is_tag) {
      if (node.label.color != color) malformed(node_str(g, v) + " joined by an edge of color " + std::to_string(color));
      if (mel != 0) malformed(node_str(g, v) + " carries a melody");
      if (++used[{v, 0, 0}] > 1) malformed(node_str(g, v) + " used by more than one edge");
      return;
    }
    const int z = cfg.zeta(color, node.smell);
    if (z == 0) malformed(node_str(g, v) + " has no slot of color " + std::to_string(color));
    if (melodies) {
      if (mel < 1 || mel > z) malformed(node_str(g, v) + " melody " + std::to_string(mel) + " out of range");
      if (++used[{v, color, mel}] > 1)
        malformed(node_str(g, v) + " slot (color " + std::to_string(color) + ", melody " + std::to_string(mel) +
                  ") used twice");
    } else {
      if (mel != 0) malformed(node_str(g, v) + " carries a melody in a wreath diagram");
      if (++used[{v, color, 0}] > z) malformed(node_str(g, v) + " has too many edges of color " + std::to_string(color));
    }
  };
  for (const auto& e : g.edges) {
    use_slot(e.plus, Sign::Plus, e.color, e.mel_plus);
    use_slot(e.minus, Sign::Minus, e.color, e.mel_minus);
  }
  for (int v = 0; v < n; ++v) {
    const auto& node = g.nodes[v];
    if (node.is_tag) {
      if (!used.contains({v, 0, 0})) malformed(node_str(g, v) + " has no edge");
      continue;
    }
    for (int j = 1; j <= cfg.q(); ++j) {
      const int z = cfg.zeta(j, node.smell);
      if (melodies) {
        for (int m = 1; m <= z; ++m)
          if (!used.contains({v, j, m}))
            malformed(node_str(g, v) + " slot (color " + std::to_string(j) + ", melody " + std::to_string(m) +
                      ") unused");
      } else if (z > 0 && used[{v, j, 0}] != z) {
        malformed(node_str(g, v) + " is missing edges of color " + std::to_string(j));
      }
    }
  }
}

}  // namespace

std::vector<std::vector<int>> Graph::components() const {
  const int n = static_cast<int>(nodes.size());
  Dsu dsu(n);
  for (const auto& e : edges) dsu.unite(e.plus, e.minus);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const int r = dsu.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

Graph Graph::induced(const std::vector<int>& node_ids) const {
  std::vector<int> pos(nodes.size(), -1);
  Graph out;
  for (int v : node_ids) pos[v] = out.add_node(nodes[v]);
  for (const auto& e : edges)
    if (pos[e.plus] >= 0 && pos[e.minus] >= 0)
      out.edges.push_back({pos[e.plus], pos[e.minus], e.color, e.mel_plus, e.mel_minus});
  return out;
}

int Component::vertex_count() const {
  return static_cast<int>(std::count_if(graph.nodes.begin(), graph.nodes.end(), [](const Node& n) { return !n.is_tag; }));
}

int Component::tag_count() const { return static_cast<int>(graph.nodes.size()) - vertex_count(); }

Graph CosetDiagram::merged() const {
  Graph out;
  for (const auto& c : components) {
    const int base = static_cast<int>(out.nodes.size());
    out.nodes.insert(out.nodes.end(), c.graph.nodes.begin(), c.graph.nodes.end());
    for (auto e : c.graph.edges) {
      e.plus += base;
      e.minus += base;
      out.edges.push_back(e);
    }
  }
  return out;
}

RawDiagram encode(const PairConfig& cfg, const GroupElement& g, const MultiIndex& alpha, const MultiIndex& beta) {
  check_element(cfg, g);
  check_multi_index(cfg, alpha);
  check_multi_index(cfg, beta);
  RawDiagram d{alpha, beta, {}};
  auto& gr = d.graph;
  std::map<std::pair<int, int>, int> plus_vertex, minus_vertex;
  for (int i = 1; i <= cfg.p(); ++i) {
    for (int k = alpha[i] + 1; k <= cfg.trunc(); ++k) plus_vertex[{i, k}] = gr.add_node(Node::vertex(Sign::Plus, i, k));
    for (int k = beta[i] + 1; k <= cfg.trunc(); ++k) minus_vertex[{i, k}] = gr.add_node(Node::vertex(Sign::Minus, i, k));
  }
  std::map<GroundPoint, int> entry, exit;
  for (const auto& w : omega_fixed(cfg, alpha)) entry[w] = gr.add_node(Node::tag(Sign::Plus, w));
  for (const auto& w : omega_fixed(cfg, beta)) exit[w] = gr.add_node(Node::tag(Sign::Minus, w));

  for (const auto& w : enumerate_omega(cfg)) {
    const auto gw = g(w);
    Edge e;
    e.color = w.color;
    if (in_fixed_set(w, alpha)) {
      e.plus = entry.at(w);
    } else {
      e.plus = plus_vertex.at({w.smell, w.level});
      e.mel_plus = w.melody;
    }
    if (in_fixed_set(gw, beta)) {
      e.minus = exit.at(gw);
    } else {
      e.minus = minus_vertex.at({gw.smell, gw.level});
      e.mel_minus = gw.melody;
    }
    gr.edges.push_back(e);
  }
  return d;
}

GroupElement decode(const PairConfig& cfg, const RawDiagram& d) {
  check_graph(cfg, d.graph, d.source, d.target, true);
  std::map<GroundPoint, GroundPoint> map;
  auto point = [&](int v, int color, int mel) {
    const auto& n = d.graph.nodes[v];
    return n.is_tag ? n.label : GroundPoint::R(color, n.smell, n.level, mel);
  };
  for (const auto& e : d.graph.edges) {
    const auto from = point(e.plus, e.color, e.mel_plus);
    const auto to = point(e.minus, e.color, e.mel_minus);
    if (!map.emplace(from, to).second) malformed("point " + from.str() + " has two edges");
  }
  if (map.size() != cfg.omega_size()) malformed("edges do not cover Omega");
  return GroupElement::from_map(map);
}

bool is_removable(Kind kind, const Graph& c) {
  if (c.nodes.size() != 2) return false;
  const auto& a = c.nodes[0];
  const auto& b = c.nodes[1];
  if (a.is_tag || b.is_tag || a.smell != b.smell) return false;
  if (kind == Kind::Plain)
    for (const auto& e : c.edges)
      if (e.mel_plus != e.mel_minus) return false;
  return true;
}

CosetDiagram canonicalize(const PairConfig& cfg, Graph g) {
  for (auto& n : g.nodes) n.level = 0;
  if (cfg.kind() == Kind::Wreath)
    for (auto& e : g.edges) e.mel_plus = e.mel_minus = 0;
  CosetDiagram out;
  for (const auto& ids : g.components()) {
    auto sub = g.induced(ids);
    if (is_removable(cfg.kind(), sub)) continue;
    Component c;
    c.graph = canonical_relabel(sub);
    c.certificate = graph_certificate(c.graph);
    out.components.push_back(std::move(c));
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const Component& a, const Component& b) { return a.certificate < b.certificate; });
  out.certificate = "[";
  for (std::size_t t = 0; t < out.components.size(); ++t)
    out.certificate += (t ? ";" : "") + out.components[t].certificate;
  out.certificate += "]";
  return out;
}

CosetDiagram project(const PairConfig& cfg, const RawDiagram& d) { return canonicalize(cfg, d.graph); }

const std::string& canon_certificate(const CosetDiagram& c) { return c.certificate; }

Morphism coset_of(const PairConfig& cfg, const GroupElement& g, const MultiIndex& alpha, const MultiIndex& beta) {
  return {alpha, beta, project(cfg, encode(cfg, g, alpha, beta))};
}

void validate_coset_graph(const PairConfig& cfg, const Graph& g, const MultiIndex& source, const MultiIndex& target) {
  check_graph(cfg, g, source, target, false);
}

}  // namespace trainlab
