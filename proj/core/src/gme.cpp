#include "gesbell/gme.hpp"

#include <string>

namespace ges {

KSubspace pair_vectors(const StabilizerSet& set) {
  KSubspace ks;
  ks.vectors = GF2Matrix(set.n);
  const std::size_t k = set.generators.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      BitVec v = local_anticommute_mask(set.generators[i], set.generators[j]);
      if (v.popcount() & 1) {
        throw validation_error("pair_vectors: generators " + std::to_string(i + 1) + " and " +
                               std::to_string(j + 1) + " do not commute");
      }
      ks.vectors.append_row(std::move(v));
    }
  }
  ks.dim = gf2_rank(ks.vectors);
  return ks;
}

bool is_gme_rank(const StabilizerSet& set) {
  ValidationReport report = validate(set);
  if (!report.valid()) throw validation_error("is_gme_rank: invalid stabilizer");
  return pair_vectors(set).dim == set.n - 1;
}

bool is_gme_oracle(const StabilizerSet& set, const OracleOptions& opts) {
  ValidationReport report = validate(set);
  if (!report.valid()) throw validation_error("is_gme_oracle: invalid stabilizer");
  if (set.n > opts.oracle_limit)
    throw resource_error("is_gme_oracle: n exceeds oracle limit " +
                         std::to_string(opts.oracle_limit));
  if (set.n == 1) return false;

  KSubspace ks = pair_vectors(set);
  std::vector<std::uint64_t> rows;
  rows.reserve(ks.vectors.n_rows());
  for (const BitVec& row : ks.vectors.rows) rows.push_back(row.as_word());

  // Canonical representatives: qubit 0 stays out of Q, the other n-1 bits
  // sweep every nonzero pattern. Each cut must be odd on some row.
  const std::uint64_t count = std::uint64_t{1} << (set.n - 1);
  for (std::uint64_t rest = 1; rest < count; ++rest) {
    const std::uint64_t phi = rest << 1;
    bool odd = false;
    for (std::uint64_t row : rows) {
      if (std::popcount(phi & row) & 1) {
        odd = true;
        break;
      }
    }
    if (!odd) return false;
  }
  return true;
}

StabilizerSet graph_state_generators(const GF2Matrix& adjacency) {
  const std::size_t n = adjacency.n_cols;
  if (adjacency.n_rows() != n)
    throw validation_error("graph_state_generators: adjacency must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency.rows[i].get(i))
      throw validation_error("graph_state_generators: nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacency.rows[i].get(j) != adjacency.rows[j].get(i))
        throw validation_error("graph_state_generators: adjacency not symmetric");
    }
  }
  StabilizerSet set;
  set.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    PauliOp g = PauliOp::identity(n);
    g.x.set(i);
    g.z = adjacency.rows[i];
    set.generators.push_back(std::move(g));
  }
  return set;
}

StabilizerSet random_valid_stabilizer(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  if (k > n) throw validation_error("random_valid_stabilizer: k > n");
  if (2 * n > 62) throw resource_error("random_valid_stabilizer: n too large");

  // Accepted symplectic rows; candidates are drawn from the commutant of the
  // accepted set (kernel of the symplectic-product map) and kept when they
  // enlarge the span. This is the symplectic Gram-Schmidt completion.
  std::vector<BitVec> accepted;
  GF2Eliminator span(2 * n);

  auto symp_product = [n](const BitVec& a, const BitVec& b) {
    bool acc = false;
    for (std::size_t q = 0; q < n; ++q) {
      acc ^= (a.get(q) && b.get(n + q));
      acc ^= (a.get(n + q) && b.get(q));
    }
    return acc;
  };

  while (accepted.size() < k) {
    // Rejection sampling: a uniform candidate commutes with all j accepted
    // rows with probability 2^-j and must also enlarge the span, so for the
    // sizes used in tests (n <= 12) a few thousand attempts always suffice.
    std::uniform_int_distribution<std::uint64_t> dist(1, (std::uint64_t{1} << (2 * n)) - 1);
    BitVec candidate(2 * n);
    bool found = false;
    for (int attempt = 0; attempt < 4096 && !found; ++attempt) {
      candidate = BitVec::from_word(dist(rng), 2 * n);
      bool ok = true;
      for (const BitVec& a : accepted) {
        if (symp_product(candidate, a)) {
          ok = false;
          break;
        }
      }
      if (ok && !span.in_span(candidate)) found = true;
    }
    if (!found)
      throw error("random_valid_stabilizer: sampling failed to extend the isotropic set");
    span.try_insert(candidate);
    accepted.push_back(candidate);
  }

  StabilizerSet set;
  set.n = n;
  for (const BitVec& row : accepted) {
    PauliOp g;
    g.n = n;
    g.x = BitVec(n);
    g.z = BitVec(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (row.get(q)) g.x.set(q);
      if (row.get(n + q)) g.z.set(q);
    }
    // Random overall sign, phase adjusted so the word stays Hermitian.
    std::uint8_t herm = (g.x & g.z).popcount() & 1;
    std::uint8_t sign = (rng() & 1) ? 2 : 0;
    g.phase_exp = static_cast<std::uint8_t>((herm + sign) & 3);
    set.generators.push_back(std::move(g));
  }
  return set;
}

}  // namespace ges
