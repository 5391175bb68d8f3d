#include "gesbell/selftest.hpp"

#include <random>

#include <gtest/gtest.h>

#include "gesbell/constructions.hpp"

using namespace ges;

namespace {

Mat pauli_x() {
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

Mat pauli_z() {
  Mat z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

}  // namespace

TEST(Canonicalize, AlreadyCanonical) {
  InvolutionPair p{pauli_x(), pauli_z()};
  Mat u = canonicalize_pair(p);
  EXPECT_NEAR((u * p.xt * u.adjoint() - pauli_x()).norm(), 0.0, 1e-10);
  EXPECT_NEAR((u * p.zt * u.adjoint() - pauli_z()).norm(), 0.0, 1e-10);
}

TEST(Canonicalize, RoundTripRandomConjugations) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    Eigen::Index half = 1 + static_cast<Eigen::Index>(trial % 4);  // d in {2,4,6,8}
    InvolutionPair p = random_conjugated_pair(rng, half);
    Mat u = canonicalize_pair(p);
    Mat xi = kron(pauli_x(), Mat::Identity(half, half));
    Mat zi = kron(pauli_z(), Mat::Identity(half, half));
    EXPECT_LE((u * p.xt * u.adjoint() - xi).norm(), 1e-8);
    EXPECT_LE((u * p.zt * u.adjoint() - zi).norm(), 1e-8);
    EXPECT_LE((u * u.adjoint() - Mat::Identity(2 * half, 2 * half)).norm(), 1e-10);
  }
}

TEST(Canonicalize, ChshOptimalPair) {
  // ((A0 + A1)/sqrt2, (A0 - A1)/sqrt2) for the canonical first party is
  // exactly (X, Z).
  ObservableSet obs = canonical_observables(2);
  InvolutionPair pair = site_pair(obs, 1);
  Mat u = canonicalize_pair(pair);
  EXPECT_NEAR((u * pair.xt * u.adjoint() - pauli_x()).norm(), 0.0, 1e-10);
  EXPECT_NEAR((u * pair.zt * u.adjoint() - pauli_z()).norm(), 0.0, 1e-10);
}

TEST(Canonicalize, Refusals) {
  Mat x3 = Mat::Zero(3, 3);
  x3(0, 1) = 1;
  x3(1, 0) = 1;
  x3(2, 2) = 1;
  Mat z3 = Mat::Zero(3, 3);
  z3(0, 0) = 1;
  z3(1, 1) = -1;
  z3(2, 2) = 1;
  // Odd dimension cannot host an anticommuting involution pair.
  EXPECT_THROW(canonicalize_pair(InvolutionPair{x3, z3}), validation_error);

  // Commuting pair: the anticommutator check fires.
  EXPECT_THROW(canonicalize_pair(InvolutionPair{pauli_z(), pauli_z()}), validation_error);

  // Not an involution.
  Mat half = 0.5 * pauli_x();
  EXPECT_THROW(canonicalize_pair(InvolutionPair{half, pauli_z()}), validation_error);
}

TEST(SitePairs, CanonicalInvariantsEverywhere) {
  for (std::size_t n : {2u, 4u, 6u}) {
    ObservableSet obs = canonical_observables(n);
    for (std::size_t party = 1; party <= n; ++party) {
      check_involution_pair(site_pair(obs, party));  // throws on failure
    }
  }
}

TEST(Stabilization, CodewordsPass) {
  for (std::size_t n = 2; n <= 6; ++n) {
    StabilizerSet set = max_generators(n);
    ObservableSet obs = canonical_observables(n);
    for (const Vec& psi : codeword_basis(set)) {
      StabilizationReport report = verify_stabilization(obs, psi, set);
      EXPECT_TRUE(report.pass) << n;
      for (double r : report.residuals) EXPECT_LE(r, 1e-10);
    }
  }
}

TEST(Stabilization, BellStatePasses) {
  StabilizerSet set = max_generators(2);
  auto basis = codeword_basis(set);
  ASSERT_EQ(basis.size(), 1u);
  StabilizationReport report =
      verify_stabilization(canonical_observables(2), basis[0], set);
  EXPECT_TRUE(report.pass);
}

TEST(Stabilization, ProductStateFails) {
  StabilizerSet set = max_generators(3);
  Vec product = Vec::Zero(8);
  product[0] = 1.0;  // |000>
  StabilizationReport report =
      verify_stabilization(canonical_observables(3), product, set);
  EXPECT_FALSE(report.pass);
  double worst = 0.0;
  for (double r : report.residuals) worst = std::max(worst, r);
  EXPECT_GE(worst, 0.5);
}

TEST(Stabilization, DimensionMismatch) {
  StabilizerSet set = max_generators(3);
  Vec wrong = Vec::Zero(4);
  EXPECT_THROW(verify_stabilization(canonical_observables(3), wrong, set),
               validation_error);
}
