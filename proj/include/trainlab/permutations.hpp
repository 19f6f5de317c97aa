#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "trainlab/core_model.hpp"

namespace trainlab {

/// Deterministic random source. Draws are built directly on the 64-bit
/// Mersenne twister so that results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform double in [0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Finite-support permutation of Omega preserving every Omega_j.
///
/// Stored sparsely: only moved points are kept. Points absent from the map
/// are fixed.
class GroupElement {
 public:
  GroupElement() = default;

  /// Builds an element from an explicit point map; fixed entries are dropped.
  /// Throws ConfigMismatch unless the map is a color-preserving bijection of
  /// its key set.
  static GroupElement from_map(const std::map<GroundPoint, GroundPoint>& map);
  static GroupElement from_cycles(const std::vector<std::vector<GroundPoint>>& cycles);

  GroundPoint operator()(const GroundPoint& pt) const;

  const std::map<GroundPoint, GroundPoint>& moved() const { return map_; }
  bool is_identity() const { return map_.empty(); }

  /// Disjoint cycles, smallest point first, sorted by first point.
  std::vector<std::vector<GroundPoint>> cycles() const;

  /// Largest level among moved regular points (0 if none).
  int max_level() const;

  bool operator==(const GroupElement&) const = default;

 private:
  std::map<GroundPoint, GroundPoint> map_;
};

/// (compose(g, h))(w) = g(h(w)).
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Throws ConfigMismatch / TruncExceeded if g moves points outside the truncated Omega.
void check_element(const PairConfig& cfg, const GroupElement& g);

/// Forcing-apart element: for each smell swaps the level blocks
/// (alpha_i, alpha_i + N] and (alpha_i + N, alpha_i + 2N] in every
/// (color, melody) copy.
GroupElement theta(const PairConfig& cfg, const MultiIndex& alpha, int N);

/// Membership in K^alpha for the config's kind.
bool is_in_k(const PairConfig& cfg, const MultiIndex& alpha, const GroupElement& g);

/// Uniform element of the finite subgroup of K^alpha moving only levels
/// in (alpha_i, window] per smell.
GroupElement sample_k(const PairConfig& cfg, const MultiIndex& alpha, int window, std::uint64_t seed);
GroupElement sample_k(const PairConfig& cfg, const MultiIndex& alpha, int window, Rng& rng);

/// Uniform element of G restricted to Omega_window (all exceptional points
/// plus regular points with level <= window[smell]).
GroupElement random_element(const PairConfig& cfg, const MultiIndex& window, Rng& rng);
GroupElement random_element(const PairConfig& cfg, int window, Rng& rng);

}  // namespace trainlab
