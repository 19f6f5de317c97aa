#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trainlab/spherical.hpp"

namespace trainlab {

/// Outcome of one property check; failures are content, not exceptions.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  double max_residual = 0.0;
  std::string note;

  bool ok() const { return failed == 0; }
  void pass() { ++passed; }
  void fail(const std::string& why);
  void residual(double r, double tol);
  void merge(const CheckResult& other);
};

struct SuiteOptions {
  int cases = 100;
  std::uint64_t seed = 7;
  int perturbations = 20;
  int support = 2;          // random elements move levels <= support
  std::vector<int> dims;    // empty: 2 per color
};

/// Random multi-index with entries in {0, 1}.
MultiIndex random_small_index(const PairConfig& cfg, Rng& rng);

CheckResult check_encoding(const PairConfig& cfg, const SuiteOptions& opt);

/// Stabilization, representative independence, glue vs forcing apart, and
/// the informational alpha-index diagnostic, in that order.
std::vector<CheckResult> check_products(const PairConfig& cfg, const SuiteOptions& opt);

CheckResult check_associativity(const PairConfig& cfg, const SuiteOptions& opt);
CheckResult check_involution(const PairConfig& cfg, const SuiteOptions& opt);

CheckResult check_multiplicativity(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt);
/// Contractivity and *-compatibility.
std::vector<CheckResult> check_contractive_star(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt);
CheckResult check_projection(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt);
/// Agreement with the oracle and biinvariance of the oracle.
std::vector<CheckResult> check_spherical(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt);

CheckResult check_gram(const PairConfig& cfg, const SuiteOptions& opt);
CheckResult check_topology(const PairConfig& cfg, const SuiteOptions& opt);
/// Exhaustive over elements moving levels <= 3 and alpha, beta in {0,1}^p.
CheckResult check_view_faithfulness(const PairConfig& cfg);

/// The degree-3 torus: colors 2 and 3 shift levels 1..3 by one and two.
GroupElement belyi_torus_element(const PairConfig& cfg);

/// Every check that applies to the config.
std::vector<CheckResult> run_suite(const PairConfig& cfg, const RepParams& rp, const SuiteOptions& opt);

}  // namespace trainlab
