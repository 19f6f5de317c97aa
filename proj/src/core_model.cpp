#include "trainlab/core_model.hpp"

#include <algorithm>
#include <sstream>

namespace trainlab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedConfig: return "MalformedConfig";
    case ErrorCode::ZeroRow: return "ZeroRow";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::TruncTooSmall: return "TruncTooSmall";
    case ErrorCode::AlphaExceedsTrunc: return "AlphaExceedsTrunc";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::TruncExceeded: return "TruncExceeded";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::NBelowBound: return "NBelowBound";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::SupportExceedsWindow: return "SupportExceedsWindow";
    case ErrorCode::InvalidRepParams: return "InvalidRepParams";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::LambdaNonzero: return "LambdaNonzero";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string kind_name(Kind kind) { return kind == Kind::Wreath ? "wreath" : "plain"; }

int PairConfig::block_size(int smell) const {
  int total = 0;
  for (int j = 1; j <= q_; ++j) total += zeta(j, smell);
  return total;
}

std::vector<std::pair<int, int>> PairConfig::slots(int smell) const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= q_; ++j)
    for (int m = 1; m <= zeta(j, smell); ++m) out.emplace_back(j, m);
  return out;
}

int PairConfig::slot_position(int smell, int color, int melody) const {
  int pos = 0;
  for (int j = 1; j < color; ++j) pos += zeta(j, smell);
  return pos + melody - 1;
}

std::size_t PairConfig::omega_size() const {
  std::size_t n = 0;
  for (int j = 1; j <= q_; ++j) {
    n += static_cast<std::size_t>(lambda(j));
    for (int i = 1; i <= p_; ++i) n += static_cast<std::size_t>(zeta(j, i)) * trunc_;
  }
  return n;
}

PairConfig PairConfig::with_kind(Kind kind) const {
  PairConfig out = *this;
  out.kind_ = kind;
  return out;
}

PairConfig PairConfig::with_trunc(int trunc) const {
  if (trunc < 1) throw Error(ErrorCode::TruncTooSmall, "trunc must be >= 1");
  PairConfig out = *this;
  out.trunc_ = trunc;
  return out;
}

std::string GroundPoint::str() const {
  std::ostringstream os;
  if (exceptional)
    os << "L" << color << "." << idx;
  else
    os << "c" << color << ".s" << smell << ".k" << level << ".m" << melody;
  return os.str();
}

int MultiIndex::max() const {
  int m = 0;
  for (int a : entries) m = std::max(m, a);
  return m;
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] > other.entries[i]) return false;
  return true;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i];
  return os.str();
}

PairConfig validate_config(const RawConfig& raw) {
  if (raw.q < 1 || raw.p < 1)
    throw Error(ErrorCode::MalformedConfig, "q and p must be positive");
  if (static_cast<int>(raw.Z.size()) != raw.q)
    throw Error(ErrorCode::MalformedConfig, "Z must have q rows");
  for (const auto& row : raw.Z)
    if (static_cast<int>(row.size()) != raw.p)
      throw Error(ErrorCode::MalformedConfig, "every row of Z must have p entries");
  if (static_cast<int>(raw.Lambda.size()) != raw.q)
    throw Error(ErrorCode::MalformedConfig, "Lambda must have q entries");

  for (const auto& row : raw.Z)
    for (int z : row)
      if (z < 0) throw Error(ErrorCode::NegativeEntry, "Z has a negative entry");
  for (int l : raw.Lambda)
    if (l < 0) throw Error(ErrorCode::NegativeEntry, "Lambda has a negative entry");
  if (raw.trunc < 1) throw Error(ErrorCode::TruncTooSmall, "trunc must be >= 1");

  for (int j = 0; j < raw.q; ++j) {
    if (std::all_of(raw.Z[j].begin(), raw.Z[j].end(), [](int z) { return z == 0; }))
      throw Error(ErrorCode::ZeroRow, "row " + std::to_string(j + 1) + " of Z is zero");
  }
  for (int i = 0; i < raw.p; ++i) {
    bool zero = true;
    for (int j = 0; j < raw.q; ++j) zero = zero && raw.Z[j][i] == 0;
    if (zero) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(i + 1) + " of Z is zero");
  }

  PairConfig cfg;
  cfg.q_ = raw.q;
  cfg.p_ = raw.p;
  cfg.Z_ = raw.Z;
  cfg.Lambda_ = raw.Lambda;
  cfg.kind_ = raw.kind;
  cfg.trunc_ = raw.trunc;
  return cfg;
}

bool contains(const PairConfig& cfg, const GroundPoint& pt) {
  if (pt.color < 1 || pt.color > cfg.q()) return false;
  if (pt.exceptional) return pt.idx >= 1 && pt.idx <= cfg.lambda(pt.color);
  if (pt.smell < 1 || pt.smell > cfg.p()) return false;
  if (pt.level < 1 || pt.level > cfg.trunc()) return false;
  return pt.melody >= 1 && pt.melody <= cfg.zeta(pt.color, pt.smell);
}

void check_point(const PairConfig& cfg, const GroundPoint& pt) {
  if (!contains(cfg, pt)) {
    if (!pt.exceptional && pt.level > cfg.trunc() && pt.level >= 1)
      throw Error(ErrorCode::TruncExceeded, "point " + pt.str() + " lies beyond trunc");
    throw Error(ErrorCode::ConfigMismatch, "point " + pt.str() + " is not in Omega");
  }
}

void check_multi_index(const PairConfig& cfg, const MultiIndex& alpha) {
  if (alpha.size() != cfg.p())
    throw Error(ErrorCode::ConfigMismatch, "multi-index must have p entries");
  for (int a : alpha.entries) {
    if (a < 0) throw Error(ErrorCode::NegativeEntry, "multi-index entries must be >= 0");
    if (a > cfg.trunc())
      throw Error(ErrorCode::AlphaExceedsTrunc, "multi-index " + alpha.str() + " exceeds trunc");
  }
}

bool in_fixed_set(const GroundPoint& pt, const MultiIndex& alpha) {
  return pt.exceptional || pt.level <= alpha[pt.smell];
}

std::vector<GroundPoint> enumerate_window(const PairConfig& cfg, const MultiIndex& window) {
  std::vector<GroundPoint> out;
  for (int j = 1; j <= cfg.q(); ++j) {
    for (int l = 1; l <= cfg.lambda(j); ++l) out.push_back(GroundPoint::L(j, l));
    for (int i = 1; i <= cfg.p(); ++i)
      for (int k = 1; k <= window[i]; ++k)
        for (int m = 1; m <= cfg.zeta(j, i); ++m) out.push_back(GroundPoint::R(j, i, k, m));
  }
  return out;
}

std::vector<GroundPoint> omega_fixed(const PairConfig& cfg, const MultiIndex& alpha) {
  check_multi_index(cfg, alpha);
  return enumerate_window(cfg, alpha);
}

std::vector<GroundPoint> enumerate_omega(const PairConfig& cfg) {
  return enumerate_window(cfg, MultiIndex{std::vector<int>(cfg.p(), cfg.trunc())});
}

}  // namespace trainlab
