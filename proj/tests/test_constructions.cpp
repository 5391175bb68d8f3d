#include "gesbell/constructions.hpp"

#include <random>

#include <gtest/gtest.h>

#include "gesbell/gme.hpp"
#include "gesbell/io.hpp"

using namespace ges;

namespace {

std::vector<std::string> words(const StabilizerSet& set) {
  std::vector<std::string> out;
  for (const PauliOp& g : set.generators) out.push_back(pauli_to_string(g));
  return out;
}

}  // namespace

TEST(KMin, KnownValuesAndInequality) {
  EXPECT_EQ(k_min(2), 2u);
  EXPECT_EQ(k_min(3), 3u);
  EXPECT_EQ(k_min(4), 3u);
  EXPECT_EQ(k_min(5), 4u);
  EXPECT_EQ(k_min(7), 4u);
  EXPECT_EQ(k_min(8), 5u);
  EXPECT_THROW(k_min(1), validation_error);
  for (std::size_t n = 2; n <= 500; ++n) {
    std::size_t k = k_min(n);
    EXPECT_GE(k * (k - 1) / 2, n - 1);
    EXPECT_LT((k - 1) * (k - 2) / 2, n - 1);  // k is minimal
  }
}

TEST(BlockPartitionShape, SizesFollowTheTable) {
  for (std::size_t n = 2; n <= 120; ++n) {
    BlockPartition part = block_partition(n);
    std::size_t k = k_min(n);
    ASSERT_EQ(part.blocks.size(), k);
    EXPECT_EQ(part.blocks[0].size(), 1u);
    for (std::size_t i = 2; i <= k - 1; ++i) EXPECT_EQ(part.blocks[i - 1].size(), i - 1);
    std::size_t total = 0;
    for (const auto& b : part.blocks) total += b.size();
    EXPECT_EQ(total, n);
    EXPECT_EQ(part.blocks[k - 1].size(), n - (k - 1) * (k - 2) / 2 - 1);
  }
}

TEST(Ghz, SmallCases) {
  EXPECT_EQ(words(ghz_generators(2)), (std::vector<std::string>{"+XX", "+ZZ"}));
  EXPECT_EQ(words(ghz_generators(3)), (std::vector<std::string>{"+XXX", "+ZZ1", "+1ZZ"}));
  EXPECT_EQ(validate(ghz_generators(3)).subspace_dim(), 1u);
  EXPECT_TRUE(is_gme_rank(ghz_generators(6)));
}

TEST(Construction2, PublishedOperators) {
  EXPECT_EQ(words(construction2_generators(4)),
            (std::vector<std::string>{"+XXXX", "+ZZX1", "+1XZZ"}));
  EXPECT_EQ(words(construction2_generators(6)),
            (std::vector<std::string>{"+XXXXXX", "+ZZX111", "+1XZZX1", "+111XZZ"}));
  EXPECT_EQ(validate(construction2_generators(4)).subspace_dim(), 2u);
  EXPECT_EQ(validate(construction2_generators(6)).subspace_dim(), 4u);
  EXPECT_EQ(validate(construction2_generators(8)).subspace_dim(), 8u);
  EXPECT_TRUE(is_gme_rank(construction2_generators(8)));
}

TEST(Construction2, CyclicVariant) {
  EXPECT_EQ(words(construction2_generators(6, true)),
            (std::vector<std::string>{"+XXXXXX", "+ZZX11X", "+1XZZX1", "+X11XZZ"}));
  for (std::size_t n : {6u, 8u, 10u, 12u}) {
    StabilizerSet set = construction2_generators(n, true);
    EXPECT_EQ(set.generators.size(), n / 2 + 1);
    EXPECT_EQ(validate(set).dim_log2, static_cast<int>(n / 2 - 1));
    EXPECT_TRUE(is_gme_rank(set));
  }
}

TEST(Construction2, Refusals) {
  EXPECT_THROW(construction2_generators(5), validation_error);
  EXPECT_THROW(construction2_generators(2), validation_error);
  EXPECT_THROW(construction2_generators(4, true), validation_error);
}

TEST(MaxGenerators, PublishedOperators) {
  EXPECT_EQ(words(max_generators(2)), (std::vector<std::string>{"+XX", "+ZZ"}));
  EXPECT_EQ(words(max_generators(3)), (std::vector<std::string>{"+XX1", "+ZZZ", "+1XX"}));
  EXPECT_EQ(words(max_generators(4)), (std::vector<std::string>{"+XXZZ", "+ZZZ1", "+1XXX"}));
  // Worked n = 7 operators, unique matrices and all.
  EXPECT_EQ(words(max_generators(7)),
            (std::vector<std::string>{"+XXZZ1XX", "+ZZZ1XX1", "+1XXXX11", "+111ZZZZ"}));
}

TEST(MaxGenerators, SweepValidatesAndIsGme) {
  for (std::size_t n = 2; n <= 64; ++n) {
    StabilizerSet set = max_generators(n);
    std::size_t k = k_min(n);
    ASSERT_EQ(set.generators.size(), k) << n;
    ValidationReport report = validate(set);
    EXPECT_TRUE(report.abelian) << n;
    EXPECT_TRUE(report.independent) << n;
    EXPECT_TRUE(report.minus_identity_free) << n;
    EXPECT_EQ(report.dim_log2, static_cast<int>(n - k)) << n;
    EXPECT_TRUE(is_gme_rank(set)) << n;
  }
}

TEST(MaxGenerators, DenseDimensionSmallN) {
  for (std::size_t n = 2; n <= 10; ++n) {
    auto basis = codeword_basis(max_generators(n));
    EXPECT_EQ(basis.size(), std::size_t{1} << (n - k_min(n))) << n;
  }
}

TEST(Blockwise, AgreesWithClosedForm) {
  for (std::size_t n = 2; n <= 64; ++n) {
    StabilizerSet block = blockwise_generators(n);  // throws on mismatch
    EXPECT_EQ(block.generators, max_generators(n).generators) << n;
  }
}

TEST(MaxGenerators, AdjacentPairProperty) {
  // Every w_p = e_p + e_{p+1} occurs among the pair vectors.
  for (std::size_t n : {3u, 5u, 8u, 13u, 21u, 40u}) {
    StabilizerSet set = max_generators(n);
    KSubspace ks = pair_vectors(set);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      BitVec w(n);
      w.set(p);
      w.set(p + 1);
      bool found = false;
      for (const BitVec& row : ks.vectors.rows) {
        if (row == w) {
          found = true;
          break;
        }
      }
      EXPECT_TRUE(found) << "n=" << n << " p=" << p;
    }
  }
}

TEST(MaxGenerators, DimensionBoundOnRandomGmeStabilizers) {
  std::mt19937_64 rng(59);
  int gme_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + rng() % 7;  // 2..8
    std::size_t k = 1 + rng() % n;
    StabilizerSet set = random_valid_stabilizer(rng, n, k);
    if (!is_gme_rank(set)) continue;
    ++gme_seen;
    ValidationReport report = validate(set);
    EXPECT_LE(report.subspace_dim(), std::uint64_t{1} << (n - k_min(n)));
  }
  EXPECT_GT(gme_seen, 50);
}

TEST(HOperators, PublishedN7) {
  auto ops = h_operators(7);
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(pauli_to_string(ops[0]), "+11ZZ111");
  EXPECT_EQ(pauli_to_string(ops[1]), "+1111XX1");
  EXPECT_EQ(pauli_to_string(ops[2]), "+11111XX");
}

TEST(HOperators, CountsAndCompletion) {
  EXPECT_EQ(h_operators(5).size(), 1u);
  EXPECT_EQ(pauli_to_string(h_operators(5)[0]), "+11ZZ1");
  EXPECT_EQ(h_operators(4).size(), 1u);
  EXPECT_EQ(pauli_to_string(h_operators(4)[0]), "+11ZZ");
  EXPECT_THROW(h_operators(3), validation_error);
  EXPECT_THROW(h_operators(2), validation_error);

  for (std::size_t n = 4; n <= 40; ++n) {
    std::size_t k = k_min(n);
    if (n == k) continue;
    auto ops = h_operators(n);
    ASSERT_EQ(ops.size(), n - k) << n;
    for (const PauliOp& h : ops) EXPECT_EQ((h.x ^ h.z).popcount(), 2u);

    StabilizerSet combined = max_generators(n);
    combined.generators.insert(combined.generators.end(), ops.begin(), ops.end());
    ValidationReport report = validate(combined);
    EXPECT_TRUE(report.abelian) << n;
    EXPECT_TRUE(report.independent) << n;
    EXPECT_EQ(report.dim_log2, 0) << n;
  }
}

TEST(UniqueMatrix, Criterion) {
  EXPECT_TRUE(unique_matrix_independent(max_generators(7).generators));
  std::vector<PauliOp> dup = {pauli_from_string("XX"), pauli_from_string("XX")};
  EXPECT_FALSE(unique_matrix_independent(dup));
  std::vector<PauliOp> disjoint = {pauli_from_string("X1"), pauli_from_string("1X")};
  EXPECT_TRUE(unique_matrix_independent(disjoint));
  std::vector<PauliOp> with_y = {pauli_from_string("Y")};
  EXPECT_THROW(unique_matrix_independent(with_y), validation_error);
}

TEST(Caching, DeterministicOutputs) {
  StabilizerSet a = max_generators(23);
  StabilizerSet b = max_generators(23);
  EXPECT_EQ(a.generators, b.generators);
}
