#include "gesbell/selftest.hpp"

#include <string>

namespace ges {

void check_involution_pair(const InvolutionPair& p, double tol) {
  if (p.xt.rows() != p.xt.cols() || p.zt.rows() != p.zt.cols() || p.xt.rows() != p.zt.rows())
    throw validation_error("involution pair: matrices must be square of equal size");
  const Eigen::Index d = p.xt.rows();
  Mat id = Mat::Identity(d, d);
  if ((p.xt - p.xt.adjoint()).norm() > tol || (p.zt - p.zt.adjoint()).norm() > tol)
    throw validation_error("involution pair: not Hermitian");
  if ((p.xt * p.xt - id).norm() > tol || (p.zt * p.zt - id).norm() > tol)
    throw validation_error("involution pair: does not square to identity");
  if ((p.xt * p.zt + p.zt * p.xt).norm() > tol)
    throw validation_error("involution pair: does not anticommute");
}

Mat canonicalize_pair(const InvolutionPair& p) {
  check_involution_pair(p);
  const Eigen::Index d = p.xt.rows();
  if (d % 2 != 0)
    throw validation_error("canonicalize_pair: dimension must be even, got " +
                           std::to_string(d));
  const Eigen::Index half = d / 2;

  Eigen::SelfAdjointEigenSolver<Mat> solver(p.xt);
  // +1 eigenvectors of Xt, in the solver's deterministic (ascending) order,
  // with the leading significant component rotated to be real positive.
  std::vector<Vec> plus;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (solver.eigenvalues()[i] > 0.0) {
      Vec v = solver.eigenvectors().col(i);
      fix_phase(v);
      plus.push_back(std::move(v));
    }
  }
  if (static_cast<Eigen::Index>(plus.size()) != half)
    throw validation_error(
        "canonicalize_pair: eigenspace dimensions differ (anticommutation is broken)");

  // Zt swaps the +-1 eigenspaces of Xt, so {u_j, Zt u_j} is an orthonormal
  // basis adapted to the pair. Sending u_j -> |0,j> and Zt u_j -> |1,j>
  // maps (Xt, Zt) to (Z x 1, X x 1); a Hadamard on the qubit slot swaps
  // those into the advertised form.
  Mat u0 = Mat::Zero(d, d);
  for (Eigen::Index j = 0; j < half; ++j) {
    Vec w = p.zt * plus[static_cast<std::size_t>(j)];
    u0.row(j) = plus[static_cast<std::size_t>(j)].adjoint();
    u0.row(half + j) = w.adjoint();
  }
  Mat hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);
  Mat u = kron(hadamard, Mat::Identity(half, half)) * u0;

  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  Mat xi = kron(x, Mat::Identity(half, half));
  Mat zi = kron(z, Mat::Identity(half, half));
  if ((u * p.xt * u.adjoint() - xi).norm() > 1e-8 ||
      (u * p.zt * u.adjoint() - zi).norm() > 1e-8)
    throw error("canonicalize_pair: canonical form not reached within tolerance");
  return u;
}

StabilizationReport verify_stabilization(const ObservableSet& obs, const Vec& state,
                                         const StabilizerSet& set, double tol) {
  if (obs.parties.size() != set.n)
    throw validation_error("verify_stabilization: observable set does not match qubit count");
  Eigen::Index total = 1;
  for (Eigen::Index dim : obs.dims()) total *= dim;
  if (state.size() != total)
    throw validation_error("verify_stabilization: state dimension mismatch");

  StabilizationReport report;
  report.tol = tol;
  for (const PauliOp& g : set.generators) {
    auto [sign, factors] = assigned_factors(g, obs, /*normalized_party1=*/true);
    KronSum op(obs.dims());
    op.add(sign, factors);
    report.residuals.push_back((op.apply(state) - state).norm());
  }
  report.pass = true;
  for (double r : report.residuals) {
    if (r > tol) report.pass = false;
  }
  return report;
}

InvolutionPair site_pair(const ObservableSet& obs, std::size_t party) {
  if (party < 1 || party > obs.parties.size())
    throw validation_error("site_pair: party index out of range");
  const Mat& a0 = obs.parties[party - 1].first;
  const Mat& a1 = obs.parties[party - 1].second;
  if (party == 1) {
    const double s = 1.0 / std::sqrt(2.0);
    return InvolutionPair{s * (a0 + a1), s * (a0 - a1)};
  }
  return InvolutionPair{a0, a1};
}

InvolutionPair random_conjugated_pair(std::mt19937_64& rng, Eigen::Index half_dim) {
  const Eigen::Index d = 2 * half_dim;
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  Mat id = Mat::Identity(half_dim, half_dim);
  return InvolutionPair{q * kron(x, id) * q.adjoint(), q * kron(z, id) * q.adjoint()};
}

}  // namespace ges
