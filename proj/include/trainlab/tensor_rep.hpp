#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "trainlab/diagrams.hpp"

namespace trainlab {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Dimensions d_j, distinguished vectors xi_i in H_i = tensor over the
/// (color, melody) slots of smell i, and unit vectors for exceptional points.
/// Slot tensors are row-major with the first slot most significant.
struct RepParams {
  std::vector<int> dims;
  std::vector<Vec> xi;                       // index smell - 1
  std::map<GroundPoint, Vec> exceptional;    // one per point of L_j
};

/// Dense size of H_i.
std::size_t block_dim(const PairConfig& cfg, const RepParams& rp, int smell);

/// Throws InvalidRepParams / DimensionMismatch.
void validate_rep(const PairConfig& cfg, const RepParams& rp);

/// Random unit vectors; symmetric over equal-color slots when symmetric
/// is set (required for the wreath kind).
RepParams random_rep(const PairConfig& cfg, const std::vector<int>& dims, std::uint64_t seed, bool symmetric);
RepParams random_rep(const PairConfig& cfg, const std::vector<int>& dims, std::uint64_t seed);

/// Averages a slot tensor over permutations of equal-color slots.
Vec symmetrize_block(const PairConfig& cfg, const RepParams& rp, int smell, const Vec& v);

/// Cap on dense tensor sizes: TRAINLAB_MAX_DIM if set, else 2^20.
std::size_t max_dense_dim();

/// Dense state over the factors of Omega with level <= window[smell],
/// canonical factor order; beyond the window it is the xi-tail.
struct TruncatedState {
  MultiIndex window;
  std::vector<GroundPoint> factors;
  std::vector<int> dims;
  Vec data;
};

/// Product basis size of H^alpha (factors of Omega_[alpha]).
std::size_t head_dim(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha);

/// Empty state shell for the window; throws DimensionCap when too large.
TruncatedState make_state(const PairConfig& cfg, const RepParams& rp, const MultiIndex& window);

TruncatedState xi_tail_state(const PairConfig& cfg, const RepParams& rp, const Vec& head, const MultiIndex& alpha,
                             const MultiIndex& window);

/// Vacuum: exceptional vectors tensored with xi everywhere.
TruncatedState vacuum(const PairConfig& cfg, const RepParams& rp, const MultiIndex& window);

/// Factor at w moves to g(w). Throws SupportExceedsWindow.
TruncatedState apply_group(const GroupElement& g, const TruncatedState& s);

/// Orthogonal projection onto H^alpha tensor xi-tail. With symmetrize,
/// each block is averaged over equal-color slot permutations before
/// pairing (a no-op for symmetric xi).
TruncatedState project_alpha(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha,
                             const TruncatedState& s, bool symmetrize = false);

/// Contracts every block beyond alpha with xi; result lives on H^alpha.
Vec extract_head(const PairConfig& cfg, const RepParams& rp, const MultiIndex& alpha, const TruncatedState& s);

cd inner(const TruncatedState& a, const TruncatedState& b);

/// rho_bar_{alpha,beta}(g): H^alpha -> H^beta, entry (v, u) =
/// <rho(g)(e_u x xi), e_v x xi>. Contracts the labeled diagram of g
/// component by component. Throws DimensionCap past max_dense_dim entries.
Mat rho_bar(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& alpha,
            const MultiIndex& beta);

/// Same matrix through dense states over the window.
Mat rho_bar_dense(const PairConfig& cfg, const RepParams& rp, const GroupElement& g, const MultiIndex& alpha,
                  const MultiIndex& beta, const MultiIndex& window);

/// Tensor of one diagram component with open legs at its tags (tag node
/// order, each leg of dimension d_color). Plus vertices carry xi, minus
/// vertices conj(xi); every edge must carry melodies at vertex sides.
struct OpenTensor {
  std::vector<int> tags;
  std::vector<int> dims;
  Vec data;
};
OpenTensor contract_graph(const PairConfig& cfg, const RepParams& rp, const Graph& component);

/// Per smell, the larger of alpha_i and the highest level g moves.
MultiIndex support_window(const PairConfig& cfg, const GroupElement& g, const MultiIndex& alpha);

}  // namespace trainlab
