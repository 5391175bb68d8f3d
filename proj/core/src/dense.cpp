#include "gesbell/dense.hpp"

#include <cmath>

namespace ges {

namespace {

// Masks in index space (qubit k at bit n-1-k).
std::uint64_t index_mask(const BitVec& bits, std::size_t n) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (bits.get(k)) m |= std::uint64_t{1} << (n - 1 - k);
  }
  return m;
}

constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

Vec apply_pauli(const PauliOp& p, const Vec& v) {
  if (p.n > 30) throw resource_error("apply_pauli: too many qubits for dense work");
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  if (static_cast<std::uint64_t>(v.size()) != dim)
    throw validation_error("apply_pauli: dimension mismatch");
  const std::uint64_t mx = index_mask(p.x, p.n);
  const std::uint64_t mz = index_mask(p.z, p.n);
  const std::complex<double> global = kIPow[p.phase_exp & 3];
  Vec out(v.size());
  for (std::uint64_t r = 0; r < dim; ++r) {
    double sign = (std::popcount(r & mz) & 1) ? -1.0 : 1.0;
    out[r ^ mx] = global * sign * v[r];
  }
  return out;
}

Mat apply_pauli_left(const PauliOp& p, const Mat& m) {
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  if (static_cast<std::uint64_t>(m.rows()) != dim)
    throw validation_error("apply_pauli_left: dimension mismatch");
  const std::uint64_t mx = index_mask(p.x, p.n);
  const std::uint64_t mz = index_mask(p.z, p.n);
  const std::complex<double> global = kIPow[p.phase_exp & 3];
  Mat out(m.rows(), m.cols());
  for (std::uint64_t r = 0; r < dim; ++r) {
    double sign = (std::popcount(r & mz) & 1) ? -1.0 : 1.0;
    out.row(r ^ mx) = global * sign * m.row(r);
  }
  return out;
}

Mat pauli_matrix(const PauliOp& p) {
  const std::uint64_t dim = std::uint64_t{1} << p.n;
  Mat m = Mat::Zero(dim, dim);
  const std::uint64_t mx = index_mask(p.x, p.n);
  const std::uint64_t mz = index_mask(p.z, p.n);
  const std::complex<double> global = kIPow[p.phase_exp & 3];
  for (std::uint64_t r = 0; r < dim; ++r) {
    double sign = (std::popcount(r & mz) & 1) ? -1.0 : 1.0;
    m(r ^ mx, r) = global * sign;
  }
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Mat kron_all(const std::vector<Mat>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& f : factors) out = kron(out, f);
  return out;
}

double hermitian_op_norm(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

void fix_phase(Vec& v, double eps) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > eps) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      return;
    }
  }
}

void KronSum::add(double coeff, std::vector<Mat> factors) {
  if (factors.size() != dims_.size())
    throw validation_error("KronSum: wrong number of factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].rows() != dims_[i] || factors[i].cols() != dims_[i])
      throw validation_error("KronSum: factor dimension mismatch");
  }
  terms_.push_back(KronTerm{coeff, std::move(factors)});
}

void KronSum::add_identity(double coeff) {
  std::vector<Mat> id;
  id.reserve(dims_.size());
  for (Eigen::Index d : dims_) id.push_back(Mat::Identity(d, d));
  add(coeff, std::move(id));
}

// Applies one Kronecker factor to site `site` of the tensor v.
static Vec apply_site(const Mat& f, const Vec& v, Eigen::Index left, Eigen::Index d,
                      Eigen::Index right) {
  Vec out = Vec::Zero(v.size());
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index r = 0; r < right; ++r) {
      Eigen::Index base = l * d * right + r;
      for (Eigen::Index i = 0; i < d; ++i) {
        std::complex<double> acc = 0;
        for (Eigen::Index j = 0; j < d; ++j) acc += f(i, j) * v[base + j * right];
        out[base + i * right] = acc;
      }
    }
  }
  return out;
}

Vec KronSum::apply(const Vec& v) const {
  if (v.size() != total_) throw validation_error("KronSum::apply: dimension mismatch");
  Vec acc = Vec::Zero(total_);
  for (const KronTerm& t : terms_) {
    Vec w = v;
    Eigen::Index left = 1;
    Eigen::Index right = total_;
    for (std::size_t s = 0; s < dims_.size(); ++s) {
      right /= dims_[s];
      w = apply_site(t.factors[s], w, left, dims_[s], right);
      left *= dims_[s];
    }
    acc += t.coeff * w;
  }
  return acc;
}

Mat KronSum::materialize() const {
  Mat acc = Mat::Zero(total_, total_);
  for (const KronTerm& t : terms_) acc += t.coeff * kron_all(t.factors);
  return acc;
}

double KronSum::op_norm(Eigen::Index dense_cutoff, int iters) const {
  if (total_ <= dense_cutoff) return hermitian_op_norm(materialize());
  // Power iteration on R^2 (R is Hermitian here), deterministic start vector.
  // ||R v|| with v approaching the top eigenvector of R^2 converges to
  // |lambda|_max from below; we keep the running maximum.
  Vec v(total_);
  for (Eigen::Index i = 0; i < total_; ++i) {
    v[i] = std::complex<double>(std::cos(0.7 * static_cast<double>(i) + 0.3),
                                std::sin(1.3 * static_cast<double>(i) + 0.1));
  }
  v.normalize();
  double est = 0.0;
  for (int it = 0; it < iters; ++it) {
    Vec w = apply(v);
    double norm_w = w.norm();
    est = std::max(est, norm_w);
    if (norm_w < 1e-300) break;
    Vec u = apply(w);
    double norm_u = u.norm();
    if (norm_u < 1e-300) break;
    v = u / norm_u;
  }
  return est;
}

}  // namespace ges
