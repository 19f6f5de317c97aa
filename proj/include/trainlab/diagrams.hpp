#pragma once

#include <string>
#include <vector>

#include "trainlab/core_model.hpp"
#include "trainlab/permutations.hpp"

namespace trainlab {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Interior vertex (a node T±[smell; level]) or a tag D±(label).
struct Node {
  bool is_tag = false;
  Sign sign = Sign::Plus;
  int smell = 0;      // vertices
  int level = 0;      // vertices of raw diagrams; 0 once labels are forgotten
  GroundPoint label;  // tags

  static Node vertex(Sign sign, int smell, int level = 0) { return {false, sign, smell, level, {}}; }
  static Node tag(Sign sign, const GroundPoint& label) { return {true, sign, 0, 0, label}; }
  int tag_color() const { return label.color; }
};

/// Colored edge joining a plus-side slot to a minus-side slot. Melodies are
/// 0 on tag sides and wherever they have been forgotten.
struct Edge {
  int plus = -1;
  int minus = -1;
  int color = 0;
  int mel_plus = 0;
  int mel_minus = 0;
};

struct Graph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  int add_node(const Node& n) {
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }
  /// Connected components as lists of node indices, ordered by smallest index.
  std::vector<std::vector<int>> components() const;
  Graph induced(const std::vector<int>& node_ids) const;
};

/// Labeled diagram of a group element (levels and melodies present).
struct RawDiagram {
  MultiIndex source;
  MultiIndex target;
  Graph graph;
};

/// One connected component in canonical node order with its certificate.
struct Component {
  Graph graph;
  std::string certificate;

  int vertex_count() const;
  int tag_count() const;
};

/// Canonical form of a double coset: components sorted by certificate.
struct CosetDiagram {
  std::vector<Component> components;
  std::string certificate = "[]";

  bool empty() const { return components.empty(); }
  /// All components merged back into one graph (node ids renumbered).
  Graph merged() const;
};

/// A morphism source -> target of the train, i.e. a double coset
/// K^target \ G / K^source.
struct Morphism {
  MultiIndex source;
  MultiIndex target;
  CosetDiagram diagram;

  const std::string& certificate() const { return diagram.certificate; }
  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target && a.diagram.certificate == b.diagram.certificate;
  }
};

RawDiagram encode(const PairConfig& cfg, const GroupElement& g, const MultiIndex& alpha,
                  const MultiIndex& beta);
GroupElement decode(const PairConfig& cfg, const RawDiagram& d);

/// Forgets levels (and melodies for the wreath kind), drops removable
/// envelopes and canonicalizes.
CosetDiagram project(const PairConfig& cfg, const RawDiagram& d);

/// Canonicalizes an arbitrary signed colored graph whose levels may or may
/// not be present; shared by project, gluing and involution.
CosetDiagram canonicalize(const PairConfig& cfg, Graph g);

/// True for a two-vertex tagless same-smell component (with matching
/// melodies on every edge for the plain kind).
bool is_removable(Kind kind, const Graph& component);

const std::string& canon_certificate(const CosetDiagram& c);

Morphism coset_of(const PairConfig& cfg, const GroupElement& g, const MultiIndex& alpha,
                  const MultiIndex& beta);

/// Structural checks on a projected diagram for source -> target. Throws
/// MalformedDiagram naming the offending slot.
void validate_coset_graph(const PairConfig& cfg, const Graph& g, const MultiIndex& source,
                          const MultiIndex& target);

}  // namespace trainlab
