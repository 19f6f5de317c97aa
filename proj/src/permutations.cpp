#include "trainlab/permutations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace trainlab {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

GroupElement GroupElement::from_map(const std::map<GroundPoint, GroundPoint>& map) {
  GroupElement g;
  std::set<GroundPoint> images;
  for (const auto& [from, to] : map) {
    if (from.color != to.color)
      throw Error(ErrorCode::ConfigMismatch, "permutation moves " + from.str() + " across colors");
    if (!images.insert(to).second)
      throw Error(ErrorCode::ConfigMismatch, "permutation is not injective at " + to.str());
  }
  for (const auto& [from, to] : map) {
    if (!map.contains(to) && !(from == to))
      throw Error(ErrorCode::ConfigMismatch, "image " + to.str() + " is not in the key set");
  }
  for (const auto& [from, to] : map)
    if (!(from == to)) g.map_.emplace(from, to);
  return g;
}

GroupElement GroupElement::from_cycles(const std::vector<std::vector<GroundPoint>>& cycles) {
  std::map<GroundPoint, GroundPoint> map;
  for (const auto& cycle : cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (!map.emplace(cycle[t], cycle[(t + 1) % cycle.size()]).second)
        throw Error(ErrorCode::ConfigMismatch, "cycles are not disjoint at " + cycle[t].str());
    }
  }
  return from_map(map);
}

GroundPoint GroupElement::operator()(const GroundPoint& pt) const {
  auto it = map_.find(pt);
  return it == map_.end() ? pt : it->second;
}

std::vector<std::vector<GroundPoint>> GroupElement::cycles() const {
  std::vector<std::vector<GroundPoint>> out;
  std::set<GroundPoint> seen;
  // map_ is ordered, so each cycle is discovered from its smallest point and
  // cycles come out sorted by first point.
  for (const auto& [start, unused] : map_) {
    if (seen.contains(start)) continue;
    std::vector<GroundPoint> cycle;
    GroundPoint cur = start;
    do {
      cycle.push_back(cur);
      seen.insert(cur);
      cur = (*this)(cur);
    } while (!(cur == start));
    out.push_back(std::move(cycle));
  }
  return out;
}

int GroupElement::max_level() const {
  int m = 0;
  for (const auto& [from, to] : map_) {
    if (!from.exceptional) m = std::max(m, from.level);
    if (!to.exceptional) m = std::max(m, to.level);
  }
  return m;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  std::map<GroundPoint, GroundPoint> map;
  for (const auto& [from, to] : h.moved()) {
    const auto img = g(to);
    if (!(img == from)) map.emplace(from, img);
  }
  for (const auto& [from, to] : g.moved())
    if (!h.moved().contains(from)) map.emplace(from, to);
  return GroupElement::from_map(map);
}

GroupElement inverse(const GroupElement& g) {
  std::map<GroundPoint, GroundPoint> map;
  for (const auto& [from, to] : g.moved()) map.emplace(to, from);
  return GroupElement::from_map(map);
}

void check_element(const PairConfig& cfg, const GroupElement& g) {
  for (const auto& [from, to] : g.moved()) {
    check_point(cfg, from);
    check_point(cfg, to);
  }
}

GroupElement theta(const PairConfig& cfg, const MultiIndex& alpha, int N) {
  check_multi_index(cfg, alpha);
  if (N < 0) throw Error(ErrorCode::TruncExceeded, "N must be non-negative");
  std::map<GroundPoint, GroundPoint> map;
  for (int i = 1; i <= cfg.p(); ++i) {
    if (alpha[i] + 2 * N > cfg.trunc())
      throw Error(ErrorCode::TruncExceeded, "theta block swap beyond trunc for smell " +
                                                std::to_string(i));
    for (int j = 1; j <= cfg.q(); ++j)
      for (int m = 1; m <= cfg.zeta(j, i); ++m)
        for (int t = 1; t <= N; ++t) {
          const auto lo = GroundPoint::R(j, i, alpha[i] + t, m);
          const auto hi = GroundPoint::R(j, i, alpha[i] + N + t, m);
          map.emplace(lo, hi);
          map.emplace(hi, lo);
        }
  }
  return GroupElement::from_map(map);
}

bool is_in_k(const PairConfig& cfg, const MultiIndex& alpha, const GroupElement& g) {
  // Level permutation per smell, read off from the moved points.
  std::map<std::pair<int, int>, int> level_image;  // (smell, level) -> level
  auto record = [&](int smell, int from, int to) {
    auto [it, inserted] = level_image.emplace(std::make_pair(smell, from), to);
    return inserted || it->second == to;
  };
  for (const auto& [from, to] : g.moved()) {
    if (from.exceptional || to.exceptional) return false;
    if (from.smell != to.smell) return false;
    if (from.level <= alpha[from.smell] || to.level <= alpha[to.smell]) return false;
    if (cfg.kind() == Kind::Plain && from.melody != to.melody) return false;
    if (!record(from.smell, from.level, to.level)) return false;
  }
  // Every (color, melody) copy of a touched level must follow the same level map.
  for (const auto& [key, target] : level_image) {
    const auto [smell, level] = key;
    for (int j = 1; j <= cfg.q(); ++j) {
      if (cfg.zeta(j, smell) == 0) continue;
      for (int m = 1; m <= cfg.zeta(j, smell); ++m) {
        const auto img = g(GroundPoint::R(j, smell, level, m));
        if (img.exceptional || img.smell != smell || img.level != target) return false;
        if (cfg.kind() == Kind::Plain && img.melody != m) return false;
      }
    }
  }
  return true;
}

GroupElement sample_k(const PairConfig& cfg, const MultiIndex& alpha, int window, Rng& rng) {
  check_multi_index(cfg, alpha);
  if (window > cfg.trunc())
    throw Error(ErrorCode::TruncExceeded, "sampling window beyond trunc");
  std::map<GroundPoint, GroundPoint> map;
  for (int i = 1; i <= cfg.p(); ++i) {
    std::vector<int> levels;
    for (int k = alpha[i] + 1; k <= window; ++k) levels.push_back(k);
    if (levels.empty()) continue;
    std::vector<int> image = levels;
    rng.shuffle(image);
    for (int j = 1; j <= cfg.q(); ++j) {
      const int z = cfg.zeta(j, i);
      for (std::size_t t = 0; t < levels.size(); ++t) {
        std::vector<int> mel(z);
        for (int m = 0; m < z; ++m) mel[m] = m + 1;
        if (cfg.kind() == Kind::Wreath) rng.shuffle(mel);
        for (int m = 1; m <= z; ++m)
          map.emplace(GroundPoint::R(j, i, levels[t], m), GroundPoint::R(j, i, image[t], mel[m - 1]));
      }
    }
  }
  return GroupElement::from_map(map);
}

GroupElement sample_k(const PairConfig& cfg, const MultiIndex& alpha, int window, std::uint64_t seed) {
  Rng rng(seed);
  return sample_k(cfg, alpha, window, rng);
}

GroupElement random_element(const PairConfig& cfg, const MultiIndex& window, Rng& rng) {
  for (int i = 1; i <= cfg.p(); ++i)
    if (window[i] > cfg.trunc()) throw Error(ErrorCode::TruncExceeded, "window beyond trunc");
  const auto pts = enumerate_window(cfg, window);
  std::map<GroundPoint, GroundPoint> map;
  for (int j = 1; j <= cfg.q(); ++j) {
    std::vector<GroundPoint> domain;
    for (const auto& pt : pts)
      if (pt.color == j) domain.push_back(pt);
    std::vector<GroundPoint> image = domain;
    rng.shuffle(image);
    for (std::size_t t = 0; t < domain.size(); ++t) map.emplace(domain[t], image[t]);
  }
  return GroupElement::from_map(map);
}

GroupElement random_element(const PairConfig& cfg, int window, Rng& rng) {
  return random_element(cfg, MultiIndex{std::vector<int>(cfg.p(), window)}, rng);
}

}  // namespace trainlab
