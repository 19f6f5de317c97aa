#pragma once

#include <doctest.h>

#include "trainlab/json_io.hpp"

namespace th {

using namespace trainlab;

inline PairConfig make_cfg(std::vector<std::vector<int>> Z, std::vector<int> Lambda = {}, Kind kind = Kind::Wreath,
                           int trunc = 8) {
  RawConfig r;
  r.q = static_cast<int>(Z.size());
  r.p = Z.empty() ? 0 : static_cast<int>(Z[0].size());
  r.Z = std::move(Z);
  r.Lambda = Lambda.empty() ? std::vector<int>(static_cast<std::size_t>(r.q), 0) : std::move(Lambda);
  r.kind = kind;
  r.trunc = trunc;
  return validate_config(r);
}

inline MultiIndex mi(std::vector<int> e) { return MultiIndex{std::move(e)}; }

inline GroundPoint R(int j, int i, int k, int m = 1) { return GroundPoint::R(j, i, k, m); }

inline GroupElement swap(const GroundPoint& a, const GroundPoint& b) { return GroupElement::from_cycles({{a, b}}); }

// Error code of a throwing call, or nullopt.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace th
