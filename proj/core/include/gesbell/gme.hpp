#pragma once

#include <random>

#include "gesbell/gf2.hpp"
#include "gesbell/stabilizer.hpp"

namespace ges {

// Bipartition Q|Q' of the qubits encoded as a bit vector (1 = member of Q).
// Q and its complement describe the same cut; the canonical representative
// has the lowest bit clear.
struct BipartitionVec {
  BitVec phi;

  bool nontrivial() const {
    if (!phi.any()) return false;
    return phi.popcount() != phi.size();
  }
  BipartitionVec canonical() const {
    BipartitionVec c{phi};
    if (c.phi.get(0)) {
      for (std::size_t i = 0; i < c.phi.size(); ++i) c.phi.flip(i);
    }
    return c;
  }
};

// The span of all pairwise anticommutation vectors v_{i,j}: rows are the
// masks for i < j in lexicographic order, dim is their GF(2) rank.
struct KSubspace {
  GF2Matrix vectors;
  std::size_t dim = 0;
};

// All k(k-1)/2 anticommutation vectors of a pairwise-commuting set. Rows
// with odd weight signal a non-commuting pair and are rejected.
KSubspace pair_vectors(const StabilizerSet& set);

// Parity form h(phi, v): 1 iff the bipartition phi is odd on v.
inline bool h_form(const BitVec& phi, const BitVec& v) { return phi.and_parity(v); }

// Rank criterion: the stabilized subspace is genuinely multipartite
// entangled iff dim K = n - 1.
bool is_gme_rank(const StabilizerSet& set);

struct OracleOptions {
  std::size_t oracle_limit = 24;  // 2^{n-1} bipartitions get enumerated
};

// Exhaustive criterion: every nontrivial bipartition must be odd on some
// pair vector. Cost 2^{n-1} * #pairs; refuses n beyond the limit.
bool is_gme_oracle(const StabilizerSet& set, const OracleOptions& opts = {});

// Graph-state generators X_i (x)_{j in N(i)} Z_j from a symmetric adjacency
// matrix with zero diagonal.
StabilizerSet graph_state_generators(const GF2Matrix& adjacency);

// Random abelian, independent (hence -1-free) stabilizer on n qubits with k
// generators: random symplectic rows restricted to the commutant of the
// rows accepted so far, with random +-1 signs. Used by the equivalence and
// bound property tests.
StabilizerSet random_valid_stabilizer(std::mt19937_64& rng, std::size_t n, std::size_t k);

}  // namespace ges
