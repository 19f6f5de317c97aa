#include "trainlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace trainlab {
namespace {

using NodeKey = std::array<int, 9>;
using EdgeKey = std::array<int, 5>;  // pos+, pos-, color, mel+, mel-

NodeKey node_key(const Node& n) {
  const int sign = n.sign == Sign::Plus ? 0 : 1;
  if (!n.is_tag) return {0, sign, n.smell, n.level, 0, 0, 0, 0, 0};
  const auto& l = n.label;
  return {1, sign, 0, 0, l.color, l.exceptional ? 0 : 1, l.idx, l.smell, l.level * 64 + l.melody};
}

struct Incidence {
  int other;
  std::array<int, 4> desc;  // side, color, my melody, other melody
};

template <class T>
std::vector<int> ranks(const std::vector<T>& keys, int* distinct) {
  std::vector<T> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  *distinct = static_cast<int>(sorted.size());
  return out;
}

class Labeler {
 public:
  explicit Labeler(const Graph& g) : g_(g), adj_(g.nodes.size()) {
    for (const auto& e : g.edges) {
      adj_[e.plus].push_back({e.minus, {0, e.color, e.mel_plus, e.mel_minus}});
      adj_[e.minus].push_back({e.plus, {1, e.color, e.mel_minus, e.mel_plus}});
    }
  }

  std::vector<int> run() {
    const int n = static_cast<int>(g_.nodes.size());
    if (n == 0) return {};
    std::vector<NodeKey> keys(n);
    for (int v = 0; v < n; ++v) keys[v] = node_key(g_.nodes[v]);
    int distinct = 0;
    search(ranks(keys, &distinct));
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[best_pos_[v]] = v;
    return order;
  }

 private:
  void refine(std::vector<int>& col) const {
    const int n = static_cast<int>(col.size());
    int cells = -1;
    while (true) {
      std::vector<std::pair<int, std::vector<std::array<int, 5>>>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].first = col[v];
        for (const auto& a : adj_[v])
          sig[v].second.push_back({a.desc[0], a.desc[1], a.desc[2], a.desc[3], col[a.other]});
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      int distinct = 0;
      col = ranks(sig, &distinct);
      if (distinct == cells || distinct == n) return;
      cells = distinct;
    }
  }

  std::vector<int> leaf_code(const std::vector<int>& pos) const {
    const int n = static_cast<int>(pos.size());
    std::vector<int> code;
    code.reserve(9 * n + 5 * g_.edges.size());
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[pos[v]] = v;
    for (int v : order) {
      const auto k = node_key(g_.nodes[v]);
      code.insert(code.end(), k.begin(), k.end());
    }
    std::vector<EdgeKey> edges;
    for (const auto& e : g_.edges) edges.push_back({pos[e.plus], pos[e.minus], e.color, e.mel_plus, e.mel_minus});
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) code.insert(code.end(), e.begin(), e.end());
    return code;
  }

  void search(std::vector<int> col) {
    refine(col);
    const int n = static_cast<int>(col.size());
    std::vector<int> count(n, 0);
    for (int c : col) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] >= 2) {
        target = c;
        break;
      }
    if (target < 0) {
      auto code = leaf_code(col);
      if (best_code_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_pos_ = col;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> child(n);
      for (int u = 0; u < n; ++u) child[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
      search(std::move(child));
    }
  }

  const Graph& g_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<int> best_code_;
  std::vector<int> best_pos_;
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) { return Labeler(g).run(); }

Graph canonical_relabel(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<int> pos(g.nodes.size());
  Graph out;
  for (std::size_t t = 0; t < order.size(); ++t) {
    pos[order[t]] = static_cast<int>(t);
    out.nodes.push_back(g.nodes[order[t]]);
  }
  for (const auto& e : g.edges) out.edges.push_back({pos[e.plus], pos[e.minus], e.color, e.mel_plus, e.mel_minus});
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.plus, a.minus, a.color, a.mel_plus, a.mel_minus) <
           std::tie(b.plus, b.minus, b.color, b.mel_plus, b.mel_minus);
  });
  return out;
}

std::string graph_certificate(const Graph& g) {
  std::ostringstream os;
  os << "N(";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& n = g.nodes[v];
    os << (v ? "," : "") << (n.sign == Sign::Plus ? '+' : '-');
    if (n.is_tag) {
      os << "t{" << n.label.str() << "}";
    } else {
      os << "v" << n.smell;
      if (n.level) os << "@" << n.level;
    }
  }
  os << ")E(";
  for (std::size_t t = 0; t < g.edges.size(); ++t) {
    const auto& e = g.edges[t];
    os << (t ? "," : "") << e.plus << ">" << e.minus << "c" << e.color;
    if (e.mel_plus || e.mel_minus) os << "m" << e.mel_plus << "." << e.mel_minus;
  }
  os << ")";
  return os.str();
}

}  // namespace trainlab
