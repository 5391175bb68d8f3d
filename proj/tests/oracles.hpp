#pragma once

// Independent dense oracles for the tests. Everything here is assembled from
// literal 2x2 matrices and Kronecker products, deliberately avoiding the
// library's bit-twiddling fast paths so the two can check each other.

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "gesbell/pauli.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

inline Mat pauli1(char letter) {
  Mat m(2, 2);
  switch (letter) {
    case 'I':
      m << 1, 0, 0, 1;
      break;
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, Cplx(0, -1), Cplx(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::runtime_error("oracle::pauli1: bad letter");
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Dense matrix of a PauliOp, evaluated by multiplying literal X and Z
// matrices per qubit: i^p * prod_k X^{x_k} Z^{z_k}.
inline Mat dense(const ges::PauliOp& p) {
  const Cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Mat m = Mat::Identity(1, 1);
  for (std::size_t k = 0; k < p.n; ++k) {
    Mat factor = Mat::Identity(2, 2);
    if (p.x.get(k)) factor = factor * pauli1('X');
    if (p.z.get(k)) factor = factor * pauli1('Z');
    m = kron(m, factor);
  }
  return ipow[p.phase_exp & 3] * m;
}

// Rank over Z_2 by exhaustive span enumeration (rows as machine words).
inline std::size_t rank_by_span(const std::vector<std::uint64_t>& rows) {
  if (rows.size() > 20) throw std::runtime_error("oracle::rank_by_span: too many rows");
  std::set<std::uint64_t> span;
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << rows.size()); ++combo) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((combo >> i) & 1) acc ^= rows[i];
    }
    span.insert(acc);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

inline std::uint64_t as_word(const ges::BitVec& v) { return v.as_word(); }

}  // namespace oracle
