#pragma once

#include <vector>

#include "trainlab/tensor_rep.hpp"
#include "trainlab/views.hpp"

namespace trainlab {

/// Gram matrix a_kl = <eta_k, eta_l> of the Young-shape vectors.
struct GramSpec {
  Mat a;
};

/// Throws NotPSD unless a is Hermitian, unit-diagonal and PSD (1e-10).
void validate_gram(const GramSpec& gram, int p);

/// Vectors eta_k realizing the Gram matrix (Cholesky, or the eigen
/// decomposition when a is singular) as RepParams with dims (p).
RepParams gram_realization(const PairConfig& cfg, const GramSpec& gram);

struct SphericalValue {
  cd value;
  std::vector<cd> per_component;
};

/// Diagram contraction for a closed morphism 0 -> 0 with Lambda = 0. For
/// the wreath kind same-color edges fill slots in certificate edge order;
/// check_assignment also evaluates the reversed filling and throws
/// InvalidRepParams when the two disagree.
SphericalValue spherical_components(const PairConfig& cfg, const RepParams& rp, const Morphism& m,
                                    bool check_assignment = false);
cd spherical_value(const PairConfig& cfg, const RepParams& rp, const Morphism& m, bool check_assignment = false);

/// <rho(g) vac, vac> on dense states over the window.
cd spherical_oracle(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& window);

/// Young shape: product over segments a -> b of a_ab.
cd gram_spherical(const PairConfig& cfg, const GramSpec& gram, const Morphism& m);

/// Chips shape: product over closed chains of tr(M_1 ... M_n) with M = X or
/// X^T at plus beads and conj(X) or X^dagger at minus beads, X the d x d
/// matrix of xi_smell.
cd chip_trace_spherical(const PairConfig& cfg, const RepParams& rp, const Morphism& m);

}  // namespace trainlab
