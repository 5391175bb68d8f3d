#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gesbell/pauli.hpp"

namespace ges {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Basis convention: qubit k (0-based) maps to bit (n-1-k) of the
// computational-basis index, i.e. qubit 0 is the most significant bit. This
// matches kron(party 0, party 1, ...).

// |out> = P |v>, computed through the permutation-with-phase action of a
// Pauli word; O(2^n) instead of a dense matmul.
Vec apply_pauli(const PauliOp& p, const Vec& v);

// P * M for a dense matrix M, one row scatter per column vector.
Mat apply_pauli_left(const PauliOp& p, const Mat& m);

// Dense 2^n x 2^n matrix of a Pauli word.
Mat pauli_matrix(const PauliOp& p);

Mat kron(const Mat& a, const Mat& b);
Mat kron_all(const std::vector<Mat>& factors);

// Largest |eigenvalue| of a Hermitian matrix.
double hermitian_op_norm(const Mat& m);

// Rotates v so its first component with |v_i| > eps is real positive.
void fix_phase(Vec& v, double eps = 1e-8);

// Sum of Kronecker products c * (F_1 (x) ... (x) F_m). Used where
// materializing the full matrix would be wasteful; supports matvec for
// power iteration and exact materialization for small dimensions.
struct KronTerm {
  double coeff = 0.0;
  std::vector<Mat> factors;
};

class KronSum {
 public:
  explicit KronSum(std::vector<Eigen::Index> dims) : dims_(std::move(dims)) {
    total_ = 1;
    for (Eigen::Index d : dims_) total_ *= d;
  }

  void add(double coeff, std::vector<Mat> factors);
  void add_identity(double coeff);

  Eigen::Index dim() const { return total_; }
  Vec apply(const Vec& v) const;
  Mat materialize() const;

  // Operator norm: exact eigensolve when the dimension is small, power
  // iteration on the square otherwise (deterministic start vector).
  double op_norm(Eigen::Index dense_cutoff = 1024, int iters = 120) const;

 private:
  std::vector<Eigen::Index> dims_;
  Eigen::Index total_ = 1;
  std::vector<KronTerm> terms_;
};

}  // namespace ges
