#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trainlab/train.hpp"

namespace trainlab {

// ---- Young segments: q = 1, Z = (1 ... 1) ----

/// End of a segment: a tag label or the smell of an interior vertex.
struct SegmentEnd {
  bool is_tag = false;
  GroundPoint label;
  int smell = 0;

  auto key() const { return std::make_tuple(is_tag ? 0 : 1, label, smell); }
  friend bool operator==(const SegmentEnd& a, const SegmentEnd& b) { return a.key() == b.key(); }
  friend bool operator<(const SegmentEnd& a, const SegmentEnd& b) { return a.key() < b.key(); }
  std::string str() const;
};

struct Segment {
  SegmentEnd origin;
  SegmentEnd end;
  friend bool operator==(const Segment&, const Segment&) = default;
  friend bool operator<(const Segment& a, const Segment& b) {
    return std::tie(a.origin, a.end) < std::tie(b.origin, b.end);
  }
};

/// Sorted multiset of segments (repetition encodes multiplicity).
struct SegmentView {
  MultiIndex source;
  MultiIndex target;
  std::vector<Segment> segments;

  friend bool operator==(const SegmentView&, const SegmentView&) = default;
  std::string str() const;
};

void require_young(const PairConfig& cfg);
SegmentView young_view(const PairConfig& cfg, const Morphism& m);
/// View-level product of g : beta -> gamma after h : alpha -> beta.
SegmentView young_glue(const PairConfig& cfg, const SegmentView& g, const SegmentView& h);
Morphism segments_to_morphism(const PairConfig& cfg, const SegmentView& v);

// ---- Chips: q = 1, Z = (2 ... 2) ----

/// A bead of a chain. Melodies are 0 for the wreath kind; for the plain kind
/// they name the slot the walk enters by and the slot it leaves by.
struct ChipToken {
  Sign sign = Sign::Plus;
  int smell = 0;
  int in_mel = 0;
  int out_mel = 0;

  auto key() const { return std::make_tuple(sign == Sign::Plus ? 0 : 1, smell, in_mel, out_mel); }
  friend bool operator==(const ChipToken& a, const ChipToken& b) { return a.key() == b.key(); }
  friend bool operator<(const ChipToken& a, const ChipToken& b) { return a.key() < b.key(); }
};

struct ChipEnd {
  Sign sign = Sign::Plus;  // + entry, - exit
  GroundPoint label;
  auto key() const { return std::make_tuple(sign == Sign::Plus ? 0 : 1, label); }
  friend bool operator==(const ChipEnd& a, const ChipEnd& b) { return a.key() == b.key(); }
  friend bool operator<(const ChipEnd& a, const ChipEnd& b) { return a.key() < b.key(); }
};

/// Open chain (two tag ends) or closed chain, in canonical orientation.
struct Chain {
  bool closed = false;
  std::optional<ChipEnd> first;
  std::optional<ChipEnd> last;
  std::vector<ChipToken> tokens;

  /// Number of edges.
  int length() const { return static_cast<int>(tokens.size()) + (closed ? 0 : 1); }
  auto key() const { return std::make_tuple(closed, first, last, tokens); }
  friend bool operator==(const Chain& a, const Chain& b) { return a.key() == b.key(); }
  friend bool operator<(const Chain& a, const Chain& b) { return a.key() < b.key(); }
};

struct ChipView {
  MultiIndex source;
  MultiIndex target;
  std::vector<Chain> chains;

  friend bool operator==(const ChipView&, const ChipView&) = default;
  std::string str() const;
};

void require_chips(const PairConfig& cfg);
ChipView chip_view(const PairConfig& cfg, const Morphism& m);
/// Joins exits of h with entries of g and cuts removable 2-cycles.
ChipView chip_glue(const PairConfig& cfg, const ChipView& g, const ChipView& h);
Morphism chips_to_morphism(const PairConfig& cfg, const ChipView& v);
/// Entry-to-exit and exit-to-entry chains are odd, same-type ends even,
/// and signs alternate along every chain.
bool chip_invariants_hold(const ChipView& v);

// ---- Polygonal surfaces (plain kind) ----

/// Per smell, a cyclic order of its (color, melody) slots.
using CyclicOrders = std::vector<std::vector<std::pair<int, int>>>;

CyclicOrders default_orders(const PairConfig& cfg);

struct SurfaceComponent {
  int V = 0;
  int E = 0;
  int F = 0;
  int chi = 0;
  int boundary_tags = 0;
  std::optional<int> genus;  // closed components only
  int V_trace = 0;           // vertex count by dart tracing
};

struct SurfaceComplex {
  CyclicOrders orders;
  std::vector<SurfaceComponent> components;
};

/// Works on any plain-kind graph, including removable envelopes.
SurfaceComplex surface_of_graph(const PairConfig& cfg, const Graph& g, const CyclicOrders& orders);
SurfaceComplex surface_view(const PairConfig& cfg, const Morphism& m, const CyclicOrders& orders);
SurfaceComplex surface_view(const PairConfig& cfg, const Morphism& m);

// ---- Belyi data: Z = (1, 1, 1)^T ----

using Perm = std::vector<int>;

struct BelyiComponent {
  int degree = 0;
  std::array<Perm, 3> sigma;
  std::array<int, 3> cycle_counts{};
  int chi = 0;
  int genus = 0;
};

struct BelyiData {
  std::vector<BelyiComponent> components;
};

int cycle_count(const Perm& p);
/// (a * b)(x) = a(b(x)).
Perm perm_compose(const Perm& a, const Perm& b);
std::string perm_cycles(const Perm& p);

BelyiData belyi_data(const PairConfig& cfg, const Morphism& m);
/// Same data for every component of a raw graph, envelopes included.
BelyiData belyi_of_graph(const PairConfig& cfg, const Graph& g);
bool product_is_identity(const BelyiComponent& c);

// ---- DOT ----

std::string dot_export(const Morphism& m);
std::string dot_export(const SurfaceComplex& s);

}  // namespace trainlab
