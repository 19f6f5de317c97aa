#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "trainlab/error.hpp"

namespace trainlab {

/// Which subgroup K of G[Z, Lambda] is used: the wreath product K°[Z]
/// (melodies may be permuted inside each level) or the plain product K*[Z].
enum class Kind { Wreath, Plain };

std::string kind_name(Kind kind);

/// Unvalidated configuration as read from a file or built by hand.
struct RawConfig {
  int q = 0;
  int p = 0;
  std::vector<std::vector<int>> Z;  // q rows, p columns
  std::vector<int> Lambda;          // q entries
  Kind kind = Kind::Wreath;
  int trunc = 0;
};

/// Validated (G, K)-pair data. All indices exposed through accessors are 1-based.
class PairConfig {
 public:
  int q() const { return q_; }
  int p() const { return p_; }
  Kind kind() const { return kind_; }
  int trunc() const { return trunc_; }

  int zeta(int color, int smell) const { return Z_[color - 1][smell - 1]; }
  int lambda(int color) const { return Lambda_[color - 1]; }
  const std::vector<std::vector<int>>& Z() const { return Z_; }
  const std::vector<int>& Lambda() const { return Lambda_; }

  /// Number of (color, melody) slots of a node of the given smell.
  int block_size(int smell) const;
  /// Slots of a node of the given smell, ordered by (color, melody).
  std::vector<std::pair<int, int>> slots(int smell) const;
  /// Position of (color, melody) in slots(smell).
  int slot_position(int smell, int color, int melody) const;

  /// Number of points of Omega in the truncated model.
  std::size_t omega_size() const;

  /// Same config with a different subgroup kind.
  PairConfig with_kind(Kind kind) const;
  PairConfig with_trunc(int trunc) const;

  bool operator==(const PairConfig&) const = default;

 private:
  friend PairConfig validate_config(const RawConfig& raw);

  int q_ = 0;
  int p_ = 0;
  std::vector<std::vector<int>> Z_;
  std::vector<int> Lambda_;
  Kind kind_ = Kind::Wreath;
  int trunc_ = 1;
};

/// A point of Omega = disjoint union of the Omega_j.
///
/// Exceptional points are the points of L_j; regular points are
/// (smell, level, melody) triples inside N_i x I(zeta_ji).
struct GroundPoint {
  int color = 1;
  bool exceptional = false;
  int idx = 0;     // exceptional only
  int smell = 0;   // regular only
  int level = 0;   // regular only
  int melody = 0;  // regular only

  static GroundPoint L(int color, int idx) { return {color, true, idx, 0, 0, 0}; }
  static GroundPoint R(int color, int smell, int level, int melody) {
    return {color, false, 0, smell, level, melody};
  }

  /// Canonical order: color, then exceptional before regular, then index or
  /// (smell, level, melody).
  auto key() const {
    return std::make_tuple(color, exceptional ? 0 : 1, idx, smell, level, melody);
  }
  friend bool operator==(const GroundPoint& a, const GroundPoint& b) { return a.key() == b.key(); }
  friend auto operator<=>(const GroundPoint& a, const GroundPoint& b) { return a.key() <=> b.key(); }

  std::string str() const;
};

/// Frozen initial levels per smell, alpha = (alpha_1, ..., alpha_p).
struct MultiIndex {
  std::vector<int> entries;

  static MultiIndex zeros(int p) { return MultiIndex{std::vector<int>(p, 0)}; }

  int operator[](int smell) const { return entries[smell - 1]; }
  int size() const { return static_cast<int>(entries.size()); }
  int max() const;
  /// Component-wise comparison.
  bool leq(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;
  std::string str() const;
};

PairConfig validate_config(const RawConfig& raw);

bool contains(const PairConfig& cfg, const GroundPoint& pt);
/// Throws ConfigMismatch unless pt is a point of the truncated Omega.
void check_point(const PairConfig& cfg, const GroundPoint& pt);
void check_multi_index(const PairConfig& cfg, const MultiIndex& alpha);

/// True iff pt is fixed by K^alpha, i.e. pt lies in Omega_[alpha].
bool in_fixed_set(const GroundPoint& pt, const MultiIndex& alpha);

/// Omega_[alpha] in canonical order.
std::vector<GroundPoint> omega_fixed(const PairConfig& cfg, const MultiIndex& alpha);

/// All points of the truncated Omega in canonical order.
std::vector<GroundPoint> enumerate_omega(const PairConfig& cfg);

/// Points of Omega with level <= window[smell] (all exceptional points included).
std::vector<GroundPoint> enumerate_window(const PairConfig& cfg, const MultiIndex& window);

}  // namespace trainlab
