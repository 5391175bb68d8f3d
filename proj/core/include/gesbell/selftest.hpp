#pragma once

#include <random>
#include <utility>
#include <vector>

#include "gesbell/bell.hpp"
#include "gesbell/dense.hpp"
#include "gesbell/stabilizer.hpp"

namespace ges {

// Pair of Hermitian involutions that anticommute: the algebra underlying the
// qubit-extraction lemma. d must be even for canonicalization.
struct InvolutionPair {
  Mat xt;
  Mat zt;
};

// Throws unless Xt^2 = Zt^2 = 1 and {Xt, Zt} = 0 within tol.
void check_involution_pair(const InvolutionPair& p, double tol = 1e-10);

// Unitary U with U Xt U+ = X (x) 1_{d/2} and U Zt U+ = Z (x) 1_{d/2}.
// Construction: diagonalize Xt, pair its +-1 eigenspaces through Zt (which
// swaps them), and assemble U from the paired bases with a deterministic
// phase convention. Throws on odd d, broken invariants, or unequal
// eigenspace dimensions.
Mat canonicalize_pair(const InvolutionPair& p);

struct StabilizationReport {
  std::vector<double> residuals;  // per generator: ||G~ psi - psi||
  double tol = 1e-8;
  bool pass = false;
};

// Checks the stabilization conditions G~_i |psi> = |psi> for the operators
// obtained from the generators under the sqrt2-normalized substitution.
StabilizationReport verify_stabilization(const ObservableSet& obs, const Vec& state,
                                         const StabilizerSet& set, double tol = 1e-8);

// The propagated pair (X~, Z~) at one site: normalized combinations at
// party 1, the plain observables elsewhere.
InvolutionPair site_pair(const ObservableSet& obs, std::size_t party);

// Test helper: (X (x) 1, Z (x) 1) on dimension 2*half_dim, conjugated by a
// seeded Haar-style unitary. canonicalize_pair must undo the conjugation.
InvolutionPair random_conjugated_pair(std::mt19937_64& rng, Eigen::Index half_dim);

}  // namespace ges
