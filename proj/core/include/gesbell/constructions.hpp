#pragma once

#include <vector>

#include "gesbell/stabilizer.hpp"

namespace ges {

// Smallest k with n - 1 <= k(k-1)/2: the minimal generator count for a
// genuinely entangled stabilizer subspace, equal to ceil((1+sqrt(8n-7))/2).
std::size_t k_min(std::size_t n);

// Qubits {1..n} split into k_min(n) blocks: |C_1| = 1, |C_i| = i-1 for
// 2 <= i <= k-1, and C_k takes the rest. first/last are 0-based qubit
// indices, inclusive.
struct BlockPartition {
  struct Block {
    std::size_t first;
    std::size_t last;
    std::size_t size() const { return last - first + 1; }
  };
  std::vector<Block> blocks;
};

BlockPartition block_partition(std::size_t n);

// GHZ family: {X...X} plus the n-1 nearest-neighbour ZZ words; stabilizes
// the n-qubit GHZ state.
StabilizerSet ghz_generators(std::size_t n);

// The even-n family with n/2 + 1 generators and subspace dimension
// 2^{n/2-1}. The cyclic variant (even n >= 6) wraps the four-qubit pattern
// around the ring; index arithmetic is mod n.
StabilizerSet construction2_generators(std::size_t n, bool cyclic = false);

// Maximal construction: k_min(n) generators stabilizing a genuinely
// entangled subspace of dimension 2^{n-k_min(n)}, built from the closed-form
// product expression. Deterministic; cached by n.
StabilizerSet max_generators(std::size_t n);

// The same operators assembled block by block from the per-block case
// tables. Serves as an independent cross-check of max_generators: the two
// assemblies must agree operator for operator.
StabilizerSet blockwise_generators(std::size_t n);

// The n - k_min(n) two-qubit completion operators H_{i,j}: each acts as a
// nearest-neighbour pair inside block C_{i+2} with the letter opposite to
// that block's generator. Together with max_generators they stabilize a
// one-dimensional subspace.
std::vector<PauliOp> h_operators(std::size_t n);

// Sufficient independence criterion: true when every operator owns a
// position where it holds one letter while all others hold the opposite
// letter or the identity. False only means "inconclusive".
bool unique_matrix_independent(const std::vector<PauliOp>& ops);

}  // namespace ges
