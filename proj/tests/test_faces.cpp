#include "gesbell/faces.hpp"

#include <gtest/gtest.h>

#include "gesbell/constructions.hpp"

using namespace ges;

TEST(SignedStabilizer, AllPlusMatchesCompletion) {
  std::vector<int> plus(7 - k_min(7), 1);
  StabilizerSet set = signed_stabilizer(7, plus);
  ASSERT_EQ(set.generators.size(), 7u);
  EXPECT_EQ(pauli_to_string(set.generators[4]), "+11ZZ111");
  EXPECT_EQ(pauli_to_string(set.generators[5]), "+1111XX1");
  EXPECT_EQ(pauli_to_string(set.generators[6]), "+11111XX");
  EXPECT_EQ(validate(set).dim_log2, 0);
}

TEST(SignedStabilizer, SignFlipGivesOrthogonalState) {
  StabilizerSet plus = signed_stabilizer(4, {1});
  StabilizerSet minus = signed_stabilizer(4, {-1});
  EXPECT_EQ(pauli_to_string(minus.generators.back()), "-11ZZ");
  auto psi_plus = codeword_basis(plus);
  auto psi_minus = codeword_basis(minus);
  ASSERT_EQ(psi_plus.size(), 1u);
  ASSERT_EQ(psi_minus.size(), 1u);
  EXPECT_NEAR(std::abs(psi_plus[0].dot(psi_minus[0])), 0.0, 1e-10);
}

TEST(SignedStabilizer, EightStatesPairwiseOrthogonal) {
  const std::size_t n = 7, t = n - k_min(n);
  std::vector<Vec> states;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << t); ++pattern) {
    std::vector<int> signs(t, 1);
    for (std::size_t b = 0; b < t; ++b) {
      if ((pattern >> b) & 1) signs[b] = -1;
    }
    auto basis = codeword_basis(signed_stabilizer(n, signs));
    ASSERT_EQ(basis.size(), 1u);
    states.push_back(std::move(basis[0]));
  }
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = a + 1; b < states.size(); ++b) {
      EXPECT_NEAR(std::abs(states[a].dot(states[b])), 0.0, 1e-10);
    }
  }
}

TEST(SignedStabilizer, BadSignVector) {
  EXPECT_THROW(signed_stabilizer(7, {1, 1}), validation_error);
  EXPECT_THROW(signed_stabilizer(7, {1, 1, 2}), validation_error);
}

TEST(BehaviourValues, StabilizedExpectations) {
  const std::size_t n = 6, t = n - k_min(n);
  std::vector<PauliOp> completions = h_operators(n);
  ObservableSet obs = canonical_observables(n);

  for (std::size_t pattern = 0; pattern < (std::size_t{1} << t); ++pattern) {
    std::vector<int> signs(t, 1);
    for (std::size_t b = 0; b < t; ++b) {
      if ((pattern >> b) & 1) signs[b] = -1;
    }
    auto basis = codeword_basis(signed_stabilizer(n, signs));
    ASSERT_EQ(basis.size(), 1u);

    // Labels: each completion operator, one generator, and the full product.
    std::vector<CorrelatorLabel> labels;
    for (const PauliOp& h : completions) {
      CorrelatorLabel l;
      for (std::size_t q = 0; q < n; ++q) {
        if (h.x.get(q)) l.emplace_back(q + 1, 0);
        if (h.z.get(q)) l.emplace_back(q + 1, 1);
      }
      labels.push_back(l);
    }
    PauliOp prod = PauliOp::identity(n);
    for (const PauliOp& h : completions) prod = multiply(prod, h);
    CorrelatorLabel all;
    for (std::size_t q = 0; q < n; ++q) {
      if (prod.x.get(q)) all.emplace_back(q + 1, 0);
      if (prod.z.get(q)) all.emplace_back(q + 1, 1);
    }
    labels.push_back(all);
    StabilizerSet gens = max_generators(n);
    const PauliOp& gk = gens.generators.back();
    CorrelatorLabel gl;
    for (std::size_t q = 0; q < n; ++q) {
      if (gk.x.get(q)) gl.emplace_back(q + 1, 0);
      if (gk.z.get(q)) gl.emplace_back(q + 1, 1);
    }
    labels.push_back(gl);

    Behaviour beh = behaviour(basis[0], obs, labels);
    // Sign-flip bijection: <H~_i> reproduces the sign vector.
    double product_of_signs = 1.0;
    for (std::size_t i = 0; i < t; ++i) {
      EXPECT_NEAR(beh.values[static_cast<Eigen::Index>(i)], signs[i], 1e-9);
      product_of_signs *= signs[i];
    }
    // <prod H~> factorizes on these states.
    EXPECT_NEAR(beh.values[static_cast<Eigen::Index>(t)], product_of_signs, 1e-9);
    // <G~_k> = 1 on every signed state.
    EXPECT_NEAR(beh.values[static_cast<Eigen::Index>(t + 1)], 1.0, 1e-9);
  }
}

TEST(FaceDimension, MatchesFormula) {
  BellOptions opts;
  EXPECT_EQ(face_dimension(4, opts), 1);   // 2^{4-3} - 1
  EXPECT_EQ(face_dimension(5, opts), 1);   // 2^{5-4} - 1
  EXPECT_EQ(face_dimension(6, opts), 3);   // 2^{6-4} - 1
  EXPECT_EQ(face_dimension(7, opts), 7);   // 2^{7-4} - 1
}

TEST(FaceDimension, DegenerateSmallN) {
  BellOptions opts;
  EXPECT_EQ(face_dimension(2, opts), 0);
  EXPECT_EQ(face_dimension(3, opts), 0);
}

TEST(FaceDimension, ReportContents) {
  BellOptions opts;
  FaceReport report = face_report(6, opts);
  EXPECT_EQ(report.n_states, 4u);
  EXPECT_EQ(report.face_dim, 3);
  EXPECT_EQ(report.expected, (Root2{Rational(2), Rational(2)}));  // 2 + 2 sqrt2
  for (double r : report.bell_residuals) EXPECT_LE(r, 1e-9);
}

TEST(FaceDimension, ChoiceOfGeneratorLabelIrrelevant) {
  // Rebuild the n = 6 behaviour family with a different generator label and
  // check the affine rank stays put.
  const std::size_t n = 6, t = n - k_min(n);
  ObservableSet obs = canonical_observables(n);
  std::vector<PauliOp> completions = h_operators(n);
  StabilizerSet gens = max_generators(n);

  for (std::size_t which : {2u, 3u}) {  // generators without party-1 support
    std::vector<CorrelatorLabel> labels;
    for (std::size_t subset = 1; subset < (std::size_t{1} << t); ++subset) {
      PauliOp prod = PauliOp::identity(n);
      for (std::size_t b = 0; b < t; ++b) {
        if ((subset >> b) & 1) prod = multiply(prod, completions[b]);
      }
      CorrelatorLabel l;
      for (std::size_t q = 0; q < n; ++q) {
        if (prod.x.get(q)) l.emplace_back(q + 1, 0);
        if (prod.z.get(q)) l.emplace_back(q + 1, 1);
      }
      labels.push_back(l);
    }
    CorrelatorLabel gl;
    const PauliOp& g = gens.generators[which];
    for (std::size_t q = 0; q < n; ++q) {
      if (g.x.get(q)) gl.emplace_back(q + 1, 0);
      if (g.z.get(q)) gl.emplace_back(q + 1, 1);
    }
    labels.push_back(gl);

    Eigen::MatrixXd rows(1 << t, labels.size());
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << t); ++pattern) {
      std::vector<int> signs(t, 1);
      for (std::size_t b = 0; b < t; ++b) {
        if ((pattern >> b) & 1) signs[b] = -1;
      }
      auto basis = codeword_basis(signed_stabilizer(n, signs));
      rows.row(static_cast<Eigen::Index>(pattern)) = behaviour(basis[0], obs, labels).values;
    }
    Eigen::MatrixXd diffs = rows.bottomRows(rows.rows() - 1).rowwise() - rows.row(0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()[i] > 1e-8 * svd.singularValues()[0]) ++rank;
    }
    EXPECT_EQ(rank, (1 << t) - 1);
  }
}
