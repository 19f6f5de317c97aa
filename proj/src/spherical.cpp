#include "trainlab/spherical.hpp"

#include <cmath>
#include <map>

namespace trainlab {
namespace {

void require_closed(const PairConfig& cfg, const Morphism& m) {
  for (int l : cfg.Lambda())
    if (l != 0) throw Error(ErrorCode::LambdaNonzero, "spherical values need Lambda = 0");
  if (!(m.source == MultiIndex::zeros(cfg.p())) || !(m.target == MultiIndex::zeros(cfg.p())))
    throw Error(ErrorCode::NotClosed, "spherical values need a morphism 0 -> 0");
  for (const auto& c : m.diagram.components)
    if (c.tag_count() > 0) throw Error(ErrorCode::NotClosed, "diagram has tags");
}

// Fills erased melodies: per (vertex, color) in edge order, or reversed.
Graph fill_melodies(const PairConfig& cfg, Graph g, bool reversed) {
  std::map<std::pair<int, int>, int> next;
  auto assign = [&](int v, int color) {
    const int z = cfg.zeta(color, g.nodes[v].smell);
    const int t = next[{v, color}]++;
    return reversed ? z - t : t + 1;
  };
  for (auto& e : g.edges) {
    e.mel_plus = assign(e.plus, e.color);
    e.mel_minus = assign(e.minus, e.color);
  }
  return g;
}

}  // namespace

void validate_gram(const GramSpec& gram, int p) {
  const auto& a = gram.a;
  if (a.rows() != p || a.cols() != p) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be p x p");
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw Error(ErrorCode::NotPSD, "Gram matrix is not Hermitian");
  for (int k = 0; k < p; ++k)
    if (std::abs(a(k, k) - cd(1.0)) > 1e-10) throw Error(ErrorCode::NotPSD, "Gram matrix needs a unit diagonal");
  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.eigenvalues().minCoeff() < -1e-10) throw Error(ErrorCode::NotPSD, "Gram matrix is not positive semidefinite");
}

RepParams gram_realization(const PairConfig& cfg, const GramSpec& gram) {
  require_young(cfg);
  validate_gram(gram, cfg.p());
  const int p = cfg.p();
  Mat rows(p, p);
  Eigen::LLT<Mat> llt(gram.a);
  if (llt.info() == Eigen::Success) {
    rows = llt.matrixL();
  } else {
    Eigen::SelfAdjointEigenSolver<Mat> es(gram.a);
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    rows = es.eigenvectors() * lam.asDiagonal();
  }
  // <eta_k, eta_l> = sum_x rows(k, x) conj(rows(l, x)) = a_kl
  RepParams rp;
  rp.dims = {p};
  for (int k = 0; k < p; ++k) {
    Vec eta = rows.row(k).transpose();
    rp.xi.push_back(eta / eta.norm());
  }
  return rp;
}

SphericalValue spherical_components(const PairConfig& cfg, const RepParams& rp, const Morphism& m,
                                    bool check_assignment) {
  require_closed(cfg, m);
  SphericalValue out{1.0, {}};
  for (const auto& c : m.diagram.components) {
    cd v;
    if (cfg.kind() == Kind::Plain) {
      v = contract_graph(cfg, rp, c.graph).data[0];
    } else {
      v = contract_graph(cfg, rp, fill_melodies(cfg, c.graph, false)).data[0];
      if (check_assignment) {
        const cd w = contract_graph(cfg, rp, fill_melodies(cfg, c.graph, true)).data[0];
        if (std::abs(v - w) > 1e-10)
          throw Error(ErrorCode::InvalidRepParams, "slot assignment changes the value; xi is not symmetric");
      }
    }
    out.per_component.push_back(v);
    out.value *= v;
  }
  return out;
}

cd spherical_value(const PairConfig& cfg, const RepParams& rp, const Morphism& m, bool check_assignment) {
  return spherical_components(cfg, rp, m, check_assignment).value;
}

cd spherical_oracle(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& window) {
  const auto vac = vacuum(cfg, rp, window);
  return inner(apply_group(g, vac), vac);
}

cd gram_spherical(const PairConfig& cfg, const GramSpec& gram, const Morphism& m) {
  require_young(cfg);
  validate_gram(gram, cfg.p());
  require_closed(cfg, m);
  cd value = 1.0;
  for (const auto& s : young_view(cfg, m).segments) value *= gram.a(s.origin.smell - 1, s.end.smell - 1);
  return value;
}

cd chip_trace_spherical(const PairConfig& cfg, const RepParams& rp, const Morphism& m) {
  require_chips(cfg);
  require_closed(cfg, m);
  const int d = rp.dims[0];
  cd value = 1.0;
  for (const auto& chain : chip_view(cfg, m).chains) {
    Mat prod = Mat::Identity(d, d);
    for (const auto& t : chain.tokens) {
      const Vec& xi = rp.xi[t.smell - 1];
      Mat X(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) X(a, b) = xi[a * d + b];
      // wreath beads carry no melodies; xi is symmetric there
      const bool straight = t.in_mel == 0 || t.in_mel == 1;
      Mat M = straight ? X : Mat(X.transpose());
      if (t.sign == Sign::Minus) M = M.conjugate().eval();
      prod = (prod * M).eval();
    }
    value *= prod.trace();
  }
  return value;
}

}  // namespace trainlab
