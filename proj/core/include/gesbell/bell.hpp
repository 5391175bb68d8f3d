#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gesbell/dense.hpp"
#include "gesbell/root2.hpp"
#include "gesbell/stabilizer.hpp"

namespace ges {

// One correlator: the parties that measure and which of their two settings
// they use. Parties are 1-based, strictly increasing; settings are 0/1.
using CorrelatorLabel = std::vector<std::pair<std::size_t, int>>;

// Multipartite two-setting Bell expression with exact Q[sqrt2] coefficients.
// Party-1 combinations (A0 +- A1) are expanded at construction time, so
// every stored term is a plain correlator.
struct BellExpression {
  std::size_t n_parties = 0;
  std::map<CorrelatorLabel, Root2> terms;
  std::optional<Root2> classical_bound;
  std::optional<Root2> quantum_bound;

  // Accumulates into the term map; zero results are dropped.
  void add_term(const CorrelatorLabel& label, const Root2& coeff);
};

// Per party: two dichotomic observables of some declared local dimension.
struct ObservableSet {
  std::vector<std::pair<Mat, Mat>> parties;

  std::vector<Eigen::Index> dims() const;
  // Hermitian involutions within tol, square, equal-sized per party.
  void check(double tol = 1e-10) const;
};

struct BellOptions {
  std::size_t brute_limit = 14;  // classical search walks 4^n corners
  std::size_t dense_limit = 12;  // log2 of the largest dense dimension
  bool verify_classical = true;  // re-verify closed-form bounds by brute force
  unsigned workers = 1;          // threads for the brute-force search
};

// Substitution scheme of the construction: party 1 contributes A0 + A1 for X
// and A0 - A1 for Z (two plain terms each), every other party contributes
// A0 for X and A1 for Z. Generators must be sign-+-1 words over X, Z, 1;
// words containing Y are refused.
BellExpression bell_from_stabilizers(const StabilizerSet& set,
                                     const std::vector<Root2>& weights);

// Bell expression of the maximal construction with unit weights. Classical
// bound k_min(n), quantum bound 2(sqrt2 - 1) + k_min(n); the classical bound
// is re-verified by brute force when n is within the brute limit.
BellExpression synth_max_inequality(std::size_t n, const BellOptions& opts = {});

// Bell expression of the cyclic even-n family with weights (1, 2, 1, ..., 1).
// Classical bound n/2 + 2, quantum bound n/2 + 2(2 sqrt2 - 1).
BellExpression synth_appendixB_inequality(std::size_t n, const BellOptions& opts = {});

struct ClassicalSolution {
  Root2 value;
  // Maximizing deterministic strategy: signs[i] = (A_0^{(i+1)}, A_1^{(i+1)}),
  // each +-1. Observables that do not appear default to +1.
  std::vector<std::pair<int, int>> signs;
};

// Exact maximum over all deterministic +-1 assignments: the hypercube is
// split on its top bits across workers and each chunk is swept by a
// Gray-code walk with exact Q[sqrt2] arithmetic. Ties between maximizing
// assignments break towards the smallest encoding, so value and witness do
// not depend on the worker count.
ClassicalSolution classical_bound(const BellExpression& expr, const BellOptions& opts = {});

// Party 1 measures (X+Z)/sqrt2 and (X-Z)/sqrt2, everybody else X and Z.
ObservableSet canonical_observables(std::size_t n);

// Seeded Hermitian involutions: random +-1 signatures conjugated by
// Haar-style random unitaries of the requested local dimension.
ObservableSet random_observables(std::size_t n, Eigen::Index local_dim, std::uint64_t seed);

// Dense Bell operator for the given observables (identity on absent
// parties). Refuses total dimensions beyond 2^dense_limit.
Mat bell_operator(const BellExpression& expr, const ObservableSet& obs,
                  const BellOptions& opts = {});

// One squared block of a sum-of-squares certificate: prefactor * (1 - G~)^2,
// where G~ is the word under the sqrt2-normalized party-1 substitution.
struct SosTerm {
  Root2 prefactor;
  PauliOp word;
};

std::vector<SosTerm> sos_recipe_max(std::size_t n);
std::vector<SosTerm> sos_recipe_appendixB(std::size_t n);

// Operator norm of shift*1 - BellOp - sum_t prefactor_t (1 - G~_t)^2. The
// identity certifies the quantum bound when the residual vanishes for
// arbitrary valid observables, not just the canonical ones.
double verify_sos(const BellExpression& expr, const ObservableSet& obs, const Root2& shift,
                  const std::vector<SosTerm>& recipe);

struct SubspaceValue {
  double min = 0.0;
  double max = 0.0;
};

// Range of the Bell operator (canonical observables) over the stabilized
// subspace, via the eigenvalues of the projected operator.
SubspaceValue quantum_value_on_subspace(const BellExpression& expr, const StabilizerSet& set,
                                        const BellOptions& opts = {});

// Per-party matrix factors of a word under the substitution scheme;
// normalized party-1 combinations when normalized_party1 is set. The
// returned sign carries the word's +-1 prefactor.
std::pair<double, std::vector<Mat>> assigned_factors(const PauliOp& word,
                                                     const ObservableSet& obs,
                                                     bool normalized_party1 = true);

}  // namespace ges
