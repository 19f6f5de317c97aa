#include "trainlab/train.hpp"

#include <algorithm>
#include <map>

namespace trainlab {

Morphism make_morphism(const PairConfig& cfg, const Graph& g, const MultiIndex& source, const MultiIndex& target) {
  validate_coset_graph(cfg, g, source, target);
  return {source, target, canonicalize(cfg, g)};
}

Morphism identity_morphism(const PairConfig& cfg, const MultiIndex& alpha) {
  Graph g;
  for (const auto& w : omega_fixed(cfg, alpha)) {
    const int a = g.add_node(Node::tag(Sign::Plus, w));
    const int b = g.add_node(Node::tag(Sign::Minus, w));
    g.edges.push_back({a, b, w.color, 0, 0});
  }
  return {alpha, alpha, canonicalize(cfg, g)};
}

Morphism glue_product(const PairConfig& cfg, const Morphism& g_mor, const Morphism& h_mor) {
  if (!(h_mor.target == g_mor.source))
    throw Error(ErrorCode::SourceTargetMismatch,
                "cannot glue " + h_mor.source.str() + "->" + h_mor.target.str() + " before " +
                    g_mor.source.str() + "->" + g_mor.target.str());
  const Graph h = h_mor.diagram.merged();
  const Graph g = g_mor.diagram.merged();
  const int base = static_cast<int>(h.nodes.size());

  // Exit tags of h and entry tags of g, both labeled by Omega_[beta].
  std::vector<bool> drop(h.nodes.size() + g.nodes.size(), false);
  std::map<GroundPoint, const Edge*> into_exit, out_of_entry;
  for (const auto& e : h.edges)
    if (h.nodes[e.minus].is_tag) {
      into_exit[h.nodes[e.minus].label] = &e;
      drop[e.minus] = true;
    }
  for (const auto& e : g.edges)
    if (g.nodes[e.plus].is_tag) {
      out_of_entry[g.nodes[e.plus].label] = &e;
      drop[base + e.plus] = true;
    }
  if (into_exit.size() != out_of_entry.size())
    throw Error(ErrorCode::MalformedDiagram, "glued tag sets differ in size");

  Graph merged;
  std::vector<int> pos(drop.size(), -1);
  for (std::size_t v = 0; v < h.nodes.size(); ++v)
    if (!drop[v]) pos[v] = merged.add_node(h.nodes[v]);
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    if (!drop[base + v]) pos[base + v] = merged.add_node(g.nodes[v]);

  for (const auto& e : h.edges)
    if (!h.nodes[e.minus].is_tag) merged.edges.push_back({pos[e.plus], pos[e.minus], e.color, e.mel_plus, e.mel_minus});
  for (const auto& e : g.edges)
    if (!g.nodes[e.plus].is_tag)
      merged.edges.push_back({pos[base + e.plus], pos[base + e.minus], e.color, e.mel_plus, e.mel_minus});
  for (const auto& [label, he] : into_exit) {
    auto it = out_of_entry.find(label);
    if (it == out_of_entry.end())
      throw Error(ErrorCode::MalformedDiagram, "exit tag " + label.str() + " has no matching entry");
    const Edge* ge = it->second;
    if (he->color != ge->color)
      throw Error(ErrorCode::MalformedDiagram, "fused edge at " + label.str() + " changes color");
    // Both ends come from different factors, so the fused edge never closes
    // a vertex-free loop.
    merged.edges.push_back({pos[he->plus], pos[base + ge->minus], he->color, he->mel_plus, ge->mel_minus});
  }
  return {h_mor.source, g_mor.target, canonicalize(cfg, merged)};
}

int stabilization_bound(const GroupElement& g, const GroupElement& h, const MultiIndex&) {
  return std::max(g.max_level(), h.max_level()) + 1;
}

Morphism force_apart_product(const PairConfig& cfg, const GroupElement& g, const GroupElement& h,
                             const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& gamma, int N,
                             bool strict) {
  check_multi_index(cfg, alpha);
  check_multi_index(cfg, gamma);
  if (strict && N < stabilization_bound(g, h, beta))
    throw Error(ErrorCode::NBelowBound, "N=" + std::to_string(N) + " is below the stabilization bound " +
                                            std::to_string(stabilization_bound(g, h, beta)));
  const auto f = compose(compose(g, theta(cfg, beta, N)), h);
  return coset_of(cfg, f, alpha, gamma);
}

Morphism force_apart_product_alpha_index(const PairConfig& cfg, const GroupElement& g, const GroupElement& h,
                                         const MultiIndex& alpha, const MultiIndex& beta,
                                         const MultiIndex& gamma, int N) {
  check_multi_index(cfg, beta);
  const auto f = compose(compose(g, theta(cfg, alpha, N)), h);
  return coset_of(cfg, f, alpha, gamma);
}

Morphism involution(const PairConfig& cfg, const Morphism& m) {
  Graph g = m.diagram.merged();
  for (auto& n : g.nodes) n.sign = flip(n.sign);
  for (auto& e : g.edges) {
    std::swap(e.plus, e.minus);
    std::swap(e.mel_plus, e.mel_minus);
  }
  return {m.target, m.source, canonicalize(cfg, g)};
}

GroupElement lift(const PairConfig& cfg, const Morphism& m) {
  const Graph g = m.diagram.merged();
  std::vector<int> level(g.nodes.size(), 0);
  std::vector<int> next_plus(cfg.p() + 1), next_minus(cfg.p() + 1);
  for (int i = 1; i <= cfg.p(); ++i) {
    next_plus[i] = m.source[i];
    next_minus[i] = m.target[i];
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& n = g.nodes[v];
    if (n.is_tag) continue;
    auto& next = n.sign == Sign::Plus ? next_plus : next_minus;
    level[v] = ++next[n.smell];
    if (level[v] > cfg.trunc())
      throw Error(ErrorCode::TruncExceeded, "lift needs level " + std::to_string(level[v]) + " beyond trunc");
  }
  // Erased melodies: hand out 1..zeta per (vertex, color) in edge order.
  std::map<std::pair<int, int>, int> next_mel;
  auto melody = [&](int v, int color, int stored) {
    if (cfg.kind() == Kind::Plain) return stored;
    return ++next_mel[{v, color}];
  };
  std::map<GroundPoint, GroundPoint> map;
  for (const auto& e : g.edges) {
    const auto& a = g.nodes[e.plus];
    const auto& b = g.nodes[e.minus];
    const auto from = a.is_tag ? a.label : GroundPoint::R(e.color, a.smell, level[e.plus], melody(e.plus, e.color, e.mel_plus));
    const auto to = b.is_tag ? b.label : GroundPoint::R(e.color, b.smell, level[e.minus], melody(e.minus, e.color, e.mel_minus));
    map.emplace(from, to);
  }
  return GroupElement::from_map(map);
}

}  // namespace trainlab
