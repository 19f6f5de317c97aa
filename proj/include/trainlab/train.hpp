#pragma once

#include "trainlab/diagrams.hpp"

namespace trainlab {

/// Validates a projected graph for source -> target and canonicalizes it.
Morphism make_morphism(const PairConfig& cfg, const Graph& g, const MultiIndex& source, const MultiIndex& target);

/// One tag-to-tag edge per point of Omega_[alpha].
Morphism identity_morphism(const PairConfig& cfg, const MultiIndex& alpha);

/// g_mor : beta -> gamma composed after h_mor : alpha -> beta.
Morphism glue_product(const PairConfig& cfg, const Morphism& g_mor, const Morphism& h_mor);

/// Max level in supp(g) and supp(h), plus one.
int stabilization_bound(const GroupElement& g, const GroupElement& h, const MultiIndex& beta);

/// coset_of(g * theta(beta, N) * h, alpha, gamma). With strict set, N below
/// stabilization_bound throws NBelowBound.
Morphism force_apart_product(const PairConfig& cfg, const GroupElement& g, const GroupElement& h,
                             const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& gamma, int N,
                             bool strict = true);

/// Same product with the forcing element indexed by the source alpha
/// instead of beta. Diagnostic only.
Morphism force_apart_product_alpha_index(const PairConfig& cfg, const GroupElement& g, const GroupElement& h,
                                         const MultiIndex& alpha, const MultiIndex& beta,
                                         const MultiIndex& gamma, int N);

/// m : alpha -> beta  gives  m^box : beta -> alpha.
Morphism involution(const PairConfig& cfg, const Morphism& m);

/// A representative g with coset_of(g, source, target) == m. Interior
/// vertices of smell i get the lowest free levels, so supp(g) stays inside
/// levels <= source_i + (plus vertices of smell i). Throws TruncExceeded if
/// that does not fit.
GroupElement lift(const PairConfig& cfg, const Morphism& m);

}  // namespace trainlab
