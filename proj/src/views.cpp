#include "trainlab/views.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace trainlab {
namespace {

const char* sign_char(Sign s) { return s == Sign::Plus ? "+" : "-"; }

bool all_entries(const PairConfig& cfg, int value) {
  for (const auto& row : cfg.Z())
    for (int z : row)
      if (z != value) return false;
  return true;
}

int vertex_melody(const Edge& e, int v) { return e.plus == v ? e.mel_plus : e.mel_minus; }

// ---- chips helpers ----

ChipToken reversed(const ChipToken& t) { return {t.sign, t.smell, t.out_mel, t.in_mel}; }

std::vector<ChipToken> reverse_tokens(const std::vector<ChipToken>& ts) {
  std::vector<ChipToken> out;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

Chain orient_open(const ChipEnd& a, const std::vector<ChipToken>& ts, const ChipEnd& b) {
  Chain fwd{false, a, b, ts};
  Chain bwd{false, b, a, reverse_tokens(ts)};
  return bwd < fwd ? bwd : fwd;
}

Chain orient_closed(const std::vector<ChipToken>& ts) {
  Chain best{true, std::nullopt, std::nullopt, ts};
  const std::size_t n = ts.size();
  for (const auto& seq : {ts, reverse_tokens(ts)}) {
    for (std::size_t r = 0; r < n; ++r) {
      Chain c{true, std::nullopt, std::nullopt, {}};
      for (std::size_t t = 0; t < n; ++t) c.tokens.push_back(seq[(r + t) % n]);
      if (c < best) best = std::move(c);
    }
  }
  return best;
}

bool removable_cycle(Kind kind, const Chain& c) {
  if (!c.closed || c.tokens.size() != 2) return false;
  const auto& a = c.tokens[0];
  const auto& b = c.tokens[1];
  if (a.smell != b.smell) return false;
  if (kind == Kind::Wreath) return true;
  return a.out_mel == b.in_mel && b.out_mel == a.in_mel;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// ---- Young ----

std::string SegmentEnd::str() const { return is_tag ? label.str() : "s" + std::to_string(smell); }

std::string SegmentView::str() const {
  std::string s;
  for (std::size_t t = 0; t < segments.size(); ++t)
    s += (t ? " " : "") + segments[t].origin.str() + "->" + segments[t].end.str();
  return s;
}

void require_young(const PairConfig& cfg) {
  if (cfg.q() != 1 || !all_entries(cfg, 1)) throw Error(ErrorCode::WrongShape, "segment view needs Z = (1 ... 1)");
}

SegmentView young_view(const PairConfig& cfg, const Morphism& m) {
  require_young(cfg);
  SegmentView v{m.source, m.target, {}};
  auto end_of = [](const Node& n) { return n.is_tag ? SegmentEnd{true, n.label, 0} : SegmentEnd{false, {}, n.smell}; };
  for (const auto& c : m.diagram.components) {
    if (c.graph.edges.size() != 1) throw Error(ErrorCode::MalformedDiagram, "Young component with several edges");
    const auto& e = c.graph.edges[0];
    v.segments.push_back({end_of(c.graph.nodes[e.plus]), end_of(c.graph.nodes[e.minus])});
  }
  std::sort(v.segments.begin(), v.segments.end());
  return v;
}

SegmentView young_glue(const PairConfig& cfg, const SegmentView& g, const SegmentView& h) {
  require_young(cfg);
  if (!(h.target == g.source)) throw Error(ErrorCode::SourceTargetMismatch, "segment views do not compose");
  std::map<GroundPoint, SegmentEnd> continuation;  // entry label of g -> end
  SegmentView out{h.source, g.target, {}};
  for (const auto& s : g.segments) {
    if (s.origin.is_tag)
      continuation[s.origin.label] = s.end;
    else
      out.segments.push_back(s);
  }
  for (const auto& s : h.segments) {
    if (!s.end.is_tag) {
      out.segments.push_back(s);
      continue;
    }
    auto it = continuation.find(s.end.label);
    if (it == continuation.end()) throw Error(ErrorCode::MalformedDiagram, "exit " + s.end.label.str() + " unmatched");
    out.segments.push_back({s.origin, it->second});
  }
  std::erase_if(out.segments, [](const Segment& s) {
    return !s.origin.is_tag && !s.end.is_tag && s.origin.smell == s.end.smell;
  });
  std::sort(out.segments.begin(), out.segments.end());
  return out;
}

Morphism segments_to_morphism(const PairConfig& cfg, const SegmentView& v) {
  require_young(cfg);
  const int mel = cfg.kind() == Kind::Plain ? 1 : 0;
  Graph g;
  for (const auto& s : v.segments) {
    const int a = g.add_node(s.origin.is_tag ? Node::tag(Sign::Plus, s.origin.label) : Node::vertex(Sign::Plus, s.origin.smell));
    const int b = g.add_node(s.end.is_tag ? Node::tag(Sign::Minus, s.end.label) : Node::vertex(Sign::Minus, s.end.smell));
    g.edges.push_back({a, b, 1, s.origin.is_tag ? 0 : mel, s.end.is_tag ? 0 : mel});
  }
  return make_morphism(cfg, g, v.source, v.target);
}

// ---- chips ----

std::string ChipView::str() const {
  std::ostringstream os;
  for (const auto& c : chains) {
    os << (c.closed ? "(" : "[");
    if (c.first) os << sign_char(c.first->sign) << c.first->label.str() << " ";
    for (const auto& t : c.tokens) {
      os << sign_char(t.sign) << t.smell;
      if (t.in_mel || t.out_mel) os << "<" << t.in_mel << t.out_mel << ">";
      os << " ";
    }
    if (c.last) os << sign_char(c.last->sign) << c.last->label.str();
    os << (c.closed ? ")" : "]");
  }
  return os.str();
}

void require_chips(const PairConfig& cfg) {
  if (cfg.q() != 1 || !all_entries(cfg, 2)) throw Error(ErrorCode::WrongShape, "chip view needs Z = (2 ... 2)");
}

ChipView chip_view(const PairConfig& cfg, const Morphism& m) {
  require_chips(cfg);
  ChipView view{m.source, m.target, {}};
  for (const auto& comp : m.diagram.components) {
    const auto& g = comp.graph;
    std::vector<std::vector<int>> inc(g.nodes.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      inc[g.edges[e].plus].push_back(static_cast<int>(e));
      inc[g.edges[e].minus].push_back(static_cast<int>(e));
    }
    auto other = [&](int e, int v) { return g.edges[e].plus == v ? g.edges[e].minus : g.edges[e].plus; };
    auto next_edge = [&](int v, int e) { return inc[v][0] == e ? inc[v][1] : inc[v][0]; };
    // Enters node cur through edge e and keeps going until a tag, or until
    // the walk is about to re-enter through the first edge.
    auto walk = [&](int cur, int e, std::vector<ChipToken>& ts) {
      const int first = e;
      while (!g.nodes[cur].is_tag) {
        const int out = next_edge(cur, e);
        ts.push_back({g.nodes[cur].sign, g.nodes[cur].smell, vertex_melody(g.edges[e], cur),
                      vertex_melody(g.edges[out], cur)});
        cur = other(out, cur);
        e = out;
        if (e == first) break;
      }
      return cur;
    };
    int tag = -1;
    for (std::size_t v = 0; v < g.nodes.size(); ++v)
      if (g.nodes[v].is_tag) {
        tag = static_cast<int>(v);
        break;
      }
    std::vector<ChipToken> ts;
    if (tag >= 0) {
      const int e = inc[tag][0];
      const int end = walk(other(e, tag), e, ts);
      const ChipEnd a{g.nodes[tag].sign, g.nodes[tag].label};
      const ChipEnd b{g.nodes[end].sign, g.nodes[end].label};
      view.chains.push_back(orient_open(a, ts, b));
    } else {
      walk(g.edges[0].minus, 0, ts);
      view.chains.push_back(orient_closed(ts));
    }
  }
  std::sort(view.chains.begin(), view.chains.end());
  return view;
}

ChipView chip_glue(const PairConfig& cfg, const ChipView& g, const ChipView& h) {
  require_chips(cfg);
  if (!(h.target == g.source)) throw Error(ErrorCode::SourceTargetMismatch, "chip views do not compose");
  struct Piece {
    std::array<ChipEnd, 2> ends;
    std::array<bool, 2> junction;
    std::vector<ChipToken> tokens;
  };
  std::vector<Piece> pieces;
  ChipView out{h.source, g.target, {}};
  // junction label -> (piece, side); index 0 for h exits, 1 for g entries
  std::array<std::map<GroundPoint, std::pair<int, int>>, 2> at;
  auto add = [&](const ChipView& v, int which) {
    const Sign joined = which == 0 ? Sign::Minus : Sign::Plus;
    for (const auto& c : v.chains) {
      if (c.closed) {
        out.chains.push_back(c);
        continue;
      }
      Piece p{{*c.first, *c.last}, {c.first->sign == joined, c.last->sign == joined}, c.tokens};
      const int id = static_cast<int>(pieces.size());
      for (int s = 0; s < 2; ++s)
        if (p.junction[s]) at[which][p.ends[s].label] = {id, s};
      pieces.push_back(std::move(p));
    }
  };
  add(h, 0);
  add(g, 1);
  const int hcount = static_cast<int>(std::count_if(h.chains.begin(), h.chains.end(), [](const Chain& c) { return !c.closed; }));

  std::vector<bool> used(pieces.size(), false);
  // Tokens of piece id read starting from side s.
  auto read = [&](int id, int s) { return s == 0 ? pieces[id].tokens : reverse_tokens(pieces[id].tokens); };
  auto partner = [&](int id, int side) {
    const int which = id < hcount ? 0 : 1;
    const auto& label = pieces[id].ends[side].label;
    auto it = at[1 - which].find(label);
    if (it == at[1 - which].end()) throw Error(ErrorCode::MalformedDiagram, "junction " + label.str() + " unmatched");
    return it->second;
  };
  for (int start = 0; start < static_cast<int>(pieces.size()); ++start) {
    if (used[start]) continue;
    int side = !pieces[start].junction[0] ? 0 : (!pieces[start].junction[1] ? 1 : -1);
    if (side < 0) continue;
    std::vector<ChipToken> ts;
    int id = start;
    while (true) {
      used[id] = true;
      auto part = read(id, side);
      ts.insert(ts.end(), part.begin(), part.end());
      const int far = 1 - side;
      if (!pieces[id].junction[far]) {
        out.chains.push_back(orient_open(pieces[start].ends[!pieces[start].junction[0] ? 0 : 1], ts, pieces[id].ends[far]));
        break;
      }
      std::tie(id, side) = partner(id, far);
    }
  }
  for (int start = 0; start < static_cast<int>(pieces.size()); ++start) {
    if (used[start]) continue;
    std::vector<ChipToken> ts;
    int id = start, side = 0;
    while (!used[id]) {
      used[id] = true;
      auto part = read(id, side);
      ts.insert(ts.end(), part.begin(), part.end());
      std::tie(id, side) = partner(id, 1 - side);
    }
    out.chains.push_back(orient_closed(ts));
  }
  std::erase_if(out.chains, [&](const Chain& c) { return removable_cycle(cfg.kind(), c); });
  for (auto& c : out.chains)
    if (c.closed) c = orient_closed(c.tokens);
  std::sort(out.chains.begin(), out.chains.end());
  return out;
}

Morphism chips_to_morphism(const PairConfig& cfg, const ChipView& v) {
  require_chips(cfg);
  const bool plain = cfg.kind() == Kind::Plain;
  Graph g;
  auto join = [&](int a, int a_mel, int b, int b_mel) {
    if (g.nodes[a].sign == g.nodes[b].sign) throw Error(ErrorCode::MalformedDiagram, "chain signs do not alternate");
    if (g.nodes[a].sign == Sign::Plus)
      g.edges.push_back({a, b, 1, plain ? a_mel : 0, plain ? b_mel : 0});
    else
      g.edges.push_back({b, a, 1, plain ? b_mel : 0, plain ? a_mel : 0});
  };
  for (const auto& c : v.chains) {
    std::vector<int> ids;
    for (const auto& t : c.tokens) ids.push_back(g.add_node(Node::vertex(t.sign, t.smell)));
    if (c.closed) {
      const std::size_t n = ids.size();
      for (std::size_t t = 0; t < n; ++t)
        join(ids[t], c.tokens[t].out_mel, ids[(t + 1) % n], c.tokens[(t + 1) % n].in_mel);
      continue;
    }
    const int a = g.add_node(Node::tag(c.first->sign, c.first->label));
    const int b = g.add_node(Node::tag(c.last->sign, c.last->label));
    if (ids.empty()) {
      join(a, 0, b, 0);
      continue;
    }
    join(a, 0, ids.front(), c.tokens.front().in_mel);
    for (std::size_t t = 0; t + 1 < ids.size(); ++t) join(ids[t], c.tokens[t].out_mel, ids[t + 1], c.tokens[t + 1].in_mel);
    join(ids.back(), c.tokens.back().out_mel, b, 0);
  }
  return make_morphism(cfg, g, v.source, v.target);
}

bool chip_invariants_hold(const ChipView& v) {
  for (const auto& c : v.chains) {
    std::vector<Sign> signs;
    if (c.first) signs.push_back(c.first->sign);
    for (const auto& t : c.tokens) signs.push_back(t.sign);
    if (c.last) signs.push_back(c.last->sign);
    for (std::size_t t = 0; t + 1 < signs.size(); ++t)
      if (signs[t] == signs[t + 1]) return false;
    if (c.closed) {
      if (signs.empty() || signs.front() == signs.back()) return false;
    } else {
      const bool odd = c.length() % 2 == 1;
      if (odd != (c.first->sign != c.last->sign)) return false;
    }
  }
  return true;
}

// ---- surfaces ----

CyclicOrders default_orders(const PairConfig& cfg) {
  CyclicOrders orders;
  for (int i = 1; i <= cfg.p(); ++i) orders.push_back(cfg.slots(i));
  return orders;
}

SurfaceComplex surface_of_graph(const PairConfig& cfg, const Graph& g, const CyclicOrders& orders) {
  if (static_cast<int>(orders.size()) != cfg.p()) throw Error(ErrorCode::MalformedConfig, "one cyclic order per smell expected");
  for (int i = 1; i <= cfg.p(); ++i) {
    auto a = orders[i - 1];
    auto b = cfg.slots(i);
    std::sort(a.begin(), a.end());
    if (a != b) throw Error(ErrorCode::MalformedConfig, "cyclic order of smell " + std::to_string(i) + " is not a slot permutation");
  }
  SurfaceComplex out{orders, {}};
  for (const auto& ids : g.components()) {
    const Graph c = g.induced(ids);
    const int n = static_cast<int>(c.nodes.size());
    // side index of each (vertex, color, melody) and corner offsets
    std::vector<int> base(n, 0), size(n, 0);
    int corners = 0;
    for (int v = 0; v < n; ++v) {
      if (c.nodes[v].is_tag) continue;
      base[v] = corners;
      size[v] = cfg.block_size(c.nodes[v].smell);
      corners += size[v];
    }
    auto side = [&](int v, int color, int mel) {
      const auto& ord = orders[c.nodes[v].smell - 1];
      const int k = static_cast<int>(ord.size());
      const int t = static_cast<int>(std::find(ord.begin(), ord.end(), std::make_pair(color, mel)) - ord.begin());
      if (t == k) throw Error(ErrorCode::WrongKind, "surface view needs melodies");
      return c.nodes[v].sign == Sign::Plus ? t : k - 1 - t;
    };
    auto end_corner = [&](int v, int t) { return base[v] + t; };
    auto start_corner = [&](int v, int t) { return base[v] + (t + size[v] - 1) % size[v]; };

    SurfaceComponent sc;
    sc.E = static_cast<int>(c.edges.size());
    Dsu dsu(corners);
    std::vector<int> partner(corners, -1);  // dart -> glued dart
    int tag_tag = 0;
    for (const auto& e : c.edges) {
      const bool pt = c.nodes[e.plus].is_tag, mt = c.nodes[e.minus].is_tag;
      if (pt && mt) {
        ++tag_tag;
        continue;
      }
      if (pt || mt) continue;
      const int a = side(e.plus, e.color, e.mel_plus);
      const int b = side(e.minus, e.color, e.mel_minus);
      dsu.unite(end_corner(e.plus, a), start_corner(e.minus, b));
      dsu.unite(start_corner(e.plus, a), end_corner(e.minus, b));
      partner[base[e.plus] + a] = base[e.minus] + b;
      partner[base[e.minus] + b] = base[e.plus] + a;
    }
    for (int v = 0; v < n; ++v) {
      if (c.nodes[v].is_tag)
        ++sc.boundary_tags;
      else
        ++sc.F;
    }
    std::set<int> classes;
    for (int x = 0; x < corners; ++x) classes.insert(dsu.find(x));
    sc.V = static_cast<int>(classes.size()) + 2 * tag_tag;

    // Dart tracing: phi(d) = sigma^-1(iota(d)); vertices = cycles + chains.
    std::vector<int> owner(corners, -1);
    for (int v = 0; v < n; ++v)
      for (int t = 0; t < size[v]; ++t) owner[base[v] + t] = v;
    auto phi = [&](int d) {
      const int x = partner[d];
      if (x < 0) return -1;
      const int v = owner[x];
      return base[v] + (x - base[v] + size[v] - 1) % size[v];
    };
    int cycles = 0, boundary = 0;
    std::vector<bool> seen(corners, false);
    for (int d = 0; d < corners; ++d)
      if (partner[d] < 0) ++boundary;
    for (int d = 0; d < corners; ++d) {
      if (seen[d]) continue;
      // walk forward; if it falls off, this is part of a chain (counted via boundary)
      int x = d;
      bool cyc = true;
      while (!seen[x]) {
        seen[x] = true;
        x = phi(x);
        if (x < 0) {
          cyc = false;
          break;
        }
      }
      if (cyc && x == d) ++cycles;
    }
    sc.V_trace = cycles + boundary + 2 * tag_tag;
    sc.chi = sc.V - sc.E + sc.F;
    if (sc.boundary_tags == 0) sc.genus = (2 - sc.chi) / 2;
    out.components.push_back(sc);
  }
  return out;
}

SurfaceComplex surface_view(const PairConfig& cfg, const Morphism& m, const CyclicOrders& orders) {
  if (cfg.kind() != Kind::Plain) throw Error(ErrorCode::WrongKind, "surface view needs the plain kind");
  return surface_of_graph(cfg, m.diagram.merged(), orders);
}

SurfaceComplex surface_view(const PairConfig& cfg, const Morphism& m) {
  return surface_view(cfg, m, default_orders(cfg));
}

// ---- Belyi ----

int cycle_count(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int count = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) seen[x] = true;
  }
  return count;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

std::string perm_cycles(const Perm& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t st = 0; st < p.size(); ++st) {
    if (seen[st]) continue;
    s += "(";
    for (int x = static_cast<int>(st); !seen[x]; x = p[x]) {
      seen[x] = true;
      s += (s.back() == '(' ? "" : " ") + std::to_string(x + 1);
    }
    s += ")";
  }
  return s;
}

namespace {
void require_belyi(const PairConfig& cfg) {
  if (cfg.q() != 3 || cfg.p() != 1 || !all_entries(cfg, 1))
    throw Error(ErrorCode::WrongShape, "Belyi data needs Z = (1,1,1)^T");
  if (cfg.Lambda() != std::vector<int>(3, 0)) throw Error(ErrorCode::WrongShape, "Belyi data needs Lambda = 0");
  if (cfg.kind() != Kind::Plain) throw Error(ErrorCode::WrongKind, "Belyi data needs the plain kind");
}
}  // namespace

BelyiData belyi_of_graph(const PairConfig& cfg, const Graph& graph) {
  require_belyi(cfg);
  BelyiData out;
  for (const auto& ids : graph.components()) {
    const Graph g = graph.induced(ids);
    std::vector<int> index(g.nodes.size(), -1);
    int np = 0, nm = 0;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (g.nodes[v].is_tag) throw Error(ErrorCode::NotClosed, "Belyi data needs a closed diagram");
      index[v] = g.nodes[v].sign == Sign::Plus ? np++ : nm++;
    }
    std::array<Perm, 3> mu;
    for (auto& p : mu) p.assign(np, -1);
    for (const auto& e : g.edges) mu[e.color - 1][index[e.plus]] = index[e.minus];
    std::array<Perm, 3> mu_inv;
    for (int c = 0; c < 3; ++c) {
      mu_inv[c].assign(np, -1);
      for (int x = 0; x < np; ++x) mu_inv[c][mu[c][x]] = x;
    }
    BelyiComponent bc;
    bc.degree = np;
    for (int c = 0; c < 3; ++c) {
      bc.sigma[c] = perm_compose(mu_inv[c], mu[(c + 1) % 3]);
      bc.cycle_counts[c] = cycle_count(bc.sigma[c]);
    }
    bc.chi = bc.cycle_counts[0] + bc.cycle_counts[1] + bc.cycle_counts[2] - bc.degree;
    bc.genus = (2 - bc.chi) / 2;
    out.components.push_back(bc);
  }
  return out;
}

BelyiData belyi_data(const PairConfig& cfg, const Morphism& m) {
  require_belyi(cfg);
  if (!(m.source == MultiIndex::zeros(1)) || !(m.target == MultiIndex::zeros(1)))
    throw Error(ErrorCode::NotClosed, "Belyi data needs a morphism 0 -> 0");
  BelyiData out;
  for (const auto& c : m.diagram.components) {
    auto part = belyi_of_graph(cfg, c.graph);
    out.components.insert(out.components.end(), part.components.begin(), part.components.end());
  }
  return out;
}

bool product_is_identity(const BelyiComponent& c) {
  const Perm p = perm_compose(c.sigma[0], perm_compose(c.sigma[1], c.sigma[2]));
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    if (p[x] != x) return false;
  return true;
}

// ---- DOT ----

namespace {
const char* palette(int k) {
  static const char* colors[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta"};
  return colors[k % 8];
}
}  // namespace

std::string dot_export(const Morphism& m) {
  std::ostringstream os;
  os << "digraph morphism {\n";
  os << "  label=\"" << m.source.str() << " -> " << m.target.str() << "\";\n";
  for (std::size_t c = 0; c < m.diagram.components.size(); ++c) {
    const auto& g = m.diagram.components[c].graph;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      const auto& n = g.nodes[v];
      os << "  n" << c << "_" << v << " [";
      if (n.is_tag)
        os << "shape=box,label=\"" << sign_char(n.sign) << n.label.str() << "\"";
      else
        os << "shape=" << (n.sign == Sign::Plus ? "circle" : "doublecircle") << ",color=" << palette(n.smell)
           << ",label=\"" << sign_char(n.sign) << n.smell << "\"";
      os << "];\n";
    }
    for (const auto& e : g.edges) {
      os << "  n" << c << "_" << e.plus << " -> n" << c << "_" << e.minus << " [color=" << palette(e.color);
      if (e.mel_plus || e.mel_minus) os << ",taillabel=\"" << e.mel_plus << "\",headlabel=\"" << e.mel_minus << "\"";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string dot_export(const SurfaceComplex& s) {
  std::ostringstream os;
  os << "graph surface {\n";
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    const auto& sc = s.components[c];
    os << "  c" << c << " [shape=box,label=\"V=" << sc.V << " E=" << sc.E << " F=" << sc.F << " chi=" << sc.chi;
    if (sc.genus) os << " g=" << *sc.genus;
    if (sc.boundary_tags) os << " tags=" << sc.boundary_tags;
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace trainlab
