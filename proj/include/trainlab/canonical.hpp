#pragma once

#include <string>
#include <vector>

#include "trainlab/diagrams.hpp"

namespace trainlab {

/// Canonical node order of a signed colored graph: position -> original node.
///
/// Ordered color refinement on node invariants and incident edge data,
/// then exhaustive individualization of the first non-singleton cell; the
/// lexicographically smallest serialization wins. Two graphs get the same
/// relabeled form iff they are isomorphic preserving signs, smells, levels,
/// tag labels, edge colors and edge melodies.
std::vector<int> canonical_order(const Graph& g);

/// g with nodes renumbered by canonical_order and edges sorted.
Graph canonical_relabel(const Graph& g);

/// Text form of an already relabeled graph.
std::string graph_certificate(const Graph& canonical);

}  // namespace trainlab
