#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gesbell/gf2.hpp"
#include "gesbell/pauli.hpp"

namespace ges {

// Ordered list of would-be stabilizer generators. Validity (abelian,
// independent, free of -1) is decided by validate(), not by the type.
struct StabilizerSet {
  std::size_t n = 0;
  std::vector<PauliOp> generators;
};

struct ValidateOptions {
  // Enumerating subset products to look for -1 walks the GF(2) kernel of the
  // symplectic rows; sets with a kernel larger than this are rejected.
  std::size_t kernel_cap_log2 = 20;
};

struct ValidationReport {
  bool abelian = false;
  bool independent = false;
  bool minus_identity_free = false;
  std::size_t rank = 0;
  // log2 of the stabilized-subspace dimension (n - rank), or -1 when the set
  // stabilizes nothing.
  int dim_log2 = -1;

  bool valid() const { return dim_log2 >= 0; }
  // 2^{n-rank} when valid, else 0. Use dim_log2 for n - rank > 62.
  std::uint64_t subspace_dim() const {
    if (dim_log2 < 0) return 0;
    if (dim_log2 > 62) throw resource_error("subspace dimension exceeds 2^62; use dim_log2");
    return std::uint64_t{1} << dim_log2;
  }
};

// Stacked (x|z) rows, width 2n: the GF(2) shadow of the generator list.
GF2Matrix symplectic_rows(const StabilizerSet& set);

// Decides whether the generators stabilize a nontrivial subspace:
// pairwise commutation, GF(2) independence, and -1 not in the generated
// group (every dependent subset must multiply to +1, checked by enumerating
// the kernel of the symplectic rows).
ValidationReport validate(const StabilizerSet& set, const ValidateOptions& opts = {});

struct DenseOptions {
  std::size_t dense_limit = 12;  // max qubits for 2^n x 2^n work
};

// prod_i (1 + G_i)/2 over the generators, the orthogonal projector onto the
// stabilized subspace. Requires a valid set and n within the dense limit.
Eigen::MatrixXcd projector(const StabilizerSet& set, const DenseOptions& opts = {});

// Orthonormal basis of the stabilized subspace, extracted from the projector
// eigendecomposition (eigenvalues > 1/2). Deterministic phase convention:
// the first significant component of each vector is real positive.
std::vector<Eigen::VectorXcd> codeword_basis(const StabilizerSet& set,
                                             const DenseOptions& opts = {});

}  // namespace ges
