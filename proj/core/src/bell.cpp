#include "gesbell/bell.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "gesbell/constructions.hpp"

namespace ges {

void BellExpression::add_term(const CorrelatorLabel& label, const Root2& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(label);
  if (it == terms.end()) {
    terms.emplace(label, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms.erase(it);
}

std::vector<Eigen::Index> ObservableSet::dims() const {
  std::vector<Eigen::Index> d;
  d.reserve(parties.size());
  for (const auto& [a0, a1] : parties) d.push_back(a0.rows());
  return d;
}

void ObservableSet::check(double tol) const {
  for (std::size_t i = 0; i < parties.size(); ++i) {
    const Mat& a0 = parties[i].first;
    const Mat& a1 = parties[i].second;
    if (a0.rows() != a0.cols() || a1.rows() != a1.cols() || a0.rows() != a1.rows())
      throw validation_error("ObservableSet: party " + std::to_string(i + 1) +
                             " observables are not square of equal size");
    Mat id = Mat::Identity(a0.rows(), a0.cols());
    for (const Mat* m : {&a0, &a1}) {
      if ((*m - m->adjoint()).norm() > tol)
        throw validation_error("ObservableSet: observable is not Hermitian");
      if ((*m * *m - id).norm() > tol)
        throw validation_error("ObservableSet: observable does not square to identity");
    }
  }
}

BellExpression bell_from_stabilizers(const StabilizerSet& set,
                                     const std::vector<Root2>& weights) {
  if (weights.size() != set.generators.size())
    throw validation_error("bell_from_stabilizers: one weight per generator required");
  for (const Root2& w : weights) {
    if (w.sign() <= 0) throw validation_error("bell_from_stabilizers: weights must be positive");
  }

  BellExpression expr;
  expr.n_parties = set.n;
  for (std::size_t g = 0; g < set.generators.size(); ++g) {
    const PauliOp& word = set.generators[g];
    if (!word.xz_only())
      throw validation_error(
          "bell_from_stabilizers: the assignment is undefined for Y factors (" +
          pauli_to_string(word) + ")");
    if (word.phase_exp != 0 && word.phase_exp != 2)
      throw validation_error("bell_from_stabilizers: generator must carry sign +-1");
    if (word.is_identity_word())
      throw validation_error("bell_from_stabilizers: identity word contributes no correlator");

    Root2 coeff = weights[g];
    if (word.phase_exp == 2) coeff = -coeff;

    CorrelatorLabel rest;  // parties 2..n
    for (std::size_t q = 1; q < set.n; ++q) {
      if (word.x.get(q)) rest.emplace_back(q + 1, 0);
      if (word.z.get(q)) rest.emplace_back(q + 1, 1);
    }

    if (word.x.get(0)) {
      // X -> A0 + A1 at party 1.
      CorrelatorLabel l0, l1;
      l0.emplace_back(1, 0);
      l1.emplace_back(1, 1);
      l0.insert(l0.end(), rest.begin(), rest.end());
      l1.insert(l1.end(), rest.begin(), rest.end());
      expr.add_term(l0, coeff);
      expr.add_term(l1, coeff);
    } else if (word.z.get(0)) {
      // Z -> A0 - A1 at party 1.
      CorrelatorLabel l0, l1;
      l0.emplace_back(1, 0);
      l1.emplace_back(1, 1);
      l0.insert(l0.end(), rest.begin(), rest.end());
      l1.insert(l1.end(), rest.begin(), rest.end());
      expr.add_term(l0, coeff);
      expr.add_term(l1, -coeff);
    } else {
      expr.add_term(rest, coeff);
    }
  }
  return expr;
}

namespace {

// Exact comparison of (a1 + b1*sqrt2) vs (a2 + b2*sqrt2) for int64 pairs.
int cmp_root2_int(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
  std::int64_t da = a1 - a2;
  std::int64_t db = b1 - b2;
  if (da == 0 && db == 0) return 0;
  int sa = da < 0 ? -1 : (da > 0 ? 1 : 0);
  int sb = db < 0 ? -1 : (db > 0 ? 1 : 0);
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  __int128 a2q = static_cast<__int128>(da) * da;
  __int128 b2q = 2 * static_cast<__int128>(db) * db;
  return a2q > b2q ? sa : sb;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

ClassicalSolution classical_bound(const BellExpression& expr, const BellOptions& opts) {
  if (expr.n_parties > opts.brute_limit)
    throw resource_error("classical_bound: " + std::to_string(expr.n_parties) +
                         " parties exceeds the brute-force limit " +
                         std::to_string(opts.brute_limit));
  if (expr.terms.empty()) throw validation_error("classical_bound: empty expression");

  // Dense re-indexing of the observables that actually occur.
  std::map<std::pair<std::size_t, int>, unsigned> bit_of;
  for (const auto& [label, coeff] : expr.terms) {
    for (const auto& ps : label) {
      if (ps.first < 1 || ps.first > expr.n_parties)
        throw validation_error("classical_bound: party index out of range");
      bit_of.emplace(ps, static_cast<unsigned>(bit_of.size()));
    }
  }
  const unsigned n_bits = static_cast<unsigned>(bit_of.size());
  if (n_bits > 40) throw resource_error("classical_bound: assignment space too large");

  // Scale all coefficients to a common denominator for exact int64 sums.
  std::int64_t den = 1;
  for (const auto& [label, coeff] : expr.terms) {
    den = lcm64(den, coeff.a.den);
    den = lcm64(den, coeff.b.den);
  }
  struct TermBits {
    std::uint64_t mask;
    std::int64_t na, nb;
    int sign;  // current sign along the Gray walk
  };
  std::vector<TermBits> terms;
  terms.reserve(expr.terms.size());
  for (const auto& [label, coeff] : expr.terms) {
    std::uint64_t mask = 0;
    for (const auto& ps : label) mask |= std::uint64_t{1} << bit_of.at(ps);
    terms.push_back(TermBits{mask, coeff.a.num * (den / coeff.a.den),
                             coeff.b.num * (den / coeff.b.den), 1});
  }
  std::vector<std::vector<std::size_t>> bucket(n_bits);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    for (unsigned b = 0; b < n_bits; ++b) {
      if ((terms[t].mask >> b) & 1) bucket[b].push_back(t);
    }
  }

  // Gray-code walk: step i flips bit ctz(i), so only the terms containing
  // that observable change sign. Assignment bits: 1 means the observable
  // takes value -1.
  std::int64_t acc_a = 0, acc_b = 0;
  for (const TermBits& t : terms) {
    acc_a += t.na;
    acc_b += t.nb;
  }
  std::int64_t best_a = acc_a, best_b = acc_b;
  std::uint64_t best_assignment = 0;
  const std::uint64_t total = std::uint64_t{1} << n_bits;
  for (std::uint64_t i = 1; i < total; ++i) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(i));
    for (std::size_t t : bucket[bit]) {
      TermBits& term = terms[t];
      acc_a -= 2 * term.sign * term.na;
      acc_b -= 2 * term.sign * term.nb;
      term.sign = -term.sign;
    }
    if (cmp_root2_int(acc_a, acc_b, best_a, best_b) > 0) {
      best_a = acc_a;
      best_b = acc_b;
      best_assignment = i ^ (i >> 1);
    }
  }

  ClassicalSolution sol;
  sol.value = Root2{Rational(best_a, den), Rational(best_b, den)};
  sol.signs.assign(expr.n_parties, {1, 1});
  for (const auto& [ps, bit] : bit_of) {
    if ((best_assignment >> bit) & 1) {
      auto& pair = sol.signs[ps.first - 1];
      (ps.second == 0 ? pair.first : pair.second) = -1;
    }
  }
  return sol;
}

ObservableSet canonical_observables(std::size_t n) {
  const double s = 1.0 / std::sqrt(2.0);
  Mat x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  ObservableSet obs;
  obs.parties.reserve(n);
  obs.parties.emplace_back(s * (x + z), s * (x - z));
  for (std::size_t i = 1; i < n; ++i) obs.parties.emplace_back(x, z);
  return obs;
}

namespace {

Mat haar_like_unitary(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is Haar-like.
  for (Eigen::Index i = 0; i < d; ++i) {
    std::complex<double> rii = r(i, i);
    q.col(i) *= rii / std::abs(rii);
  }
  return q;
}

Mat random_involution(std::mt19937_64& rng, Eigen::Index d) {
  Eigen::VectorXd signature(d);
  bool saw_plus = false, saw_minus = false;
  for (Eigen::Index i = 0; i < d; ++i) {
    bool plus = rng() & 1;
    signature[i] = plus ? 1.0 : -1.0;
    (plus ? saw_plus : saw_minus) = true;
  }
  if (!saw_plus) signature[0] = 1.0;
  if (!saw_minus) signature[d - 1] = -1.0;
  Mat u = haar_like_unitary(rng, d);
  return u * signature.cast<std::complex<double>>().asDiagonal() * u.adjoint();
}

}  // namespace

ObservableSet random_observables(std::size_t n, Eigen::Index local_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ObservableSet obs;
  obs.parties.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat a0 = random_involution(rng, local_dim);
    Mat a1 = random_involution(rng, local_dim);
    obs.parties.emplace_back(std::move(a0), std::move(a1));
  }
  return obs;
}

namespace {

void check_dense_budget(const std::vector<Eigen::Index>& dims, std::size_t dense_limit) {
  long double total = 1;
  for (Eigen::Index d : dims) total *= static_cast<long double>(d);
  if (total > std::pow(2.0L, static_cast<long double>(dense_limit)))
    throw resource_error("dense dimension exceeds 2^" + std::to_string(dense_limit));
}

std::vector<Mat> label_factors(const CorrelatorLabel& label, const ObservableSet& obs) {
  std::vector<Mat> factors;
  factors.reserve(obs.parties.size());
  for (std::size_t p = 0; p < obs.parties.size(); ++p) {
    factors.push_back(Mat::Identity(obs.parties[p].first.rows(), obs.parties[p].first.rows()));
  }
  for (const auto& [party, setting] : label) {
    if (party < 1 || party > obs.parties.size())
      throw validation_error("bell: correlator references an absent party");
    factors[party - 1] = setting == 0 ? obs.parties[party - 1].first
                                      : obs.parties[party - 1].second;
  }
  return factors;
}

}  // namespace

Mat bell_operator(const BellExpression& expr, const ObservableSet& obs,
                  const BellOptions& opts) {
  if (obs.parties.size() != expr.n_parties)
    throw validation_error("bell_operator: observable set does not match party count");
  obs.check();
  check_dense_budget(obs.dims(), opts.dense_limit);

  Eigen::Index total = 1;
  for (Eigen::Index d : obs.dims()) total *= d;
  Mat acc = Mat::Zero(total, total);
  for (const auto& [label, coeff] : expr.terms) {
    acc += coeff.to_double() * kron_all(label_factors(label, obs));
  }
  if ((acc - acc.adjoint()).norm() > 1e-10)
    throw error("bell_operator: operator is not Hermitian");
  return acc;
}

std::pair<double, std::vector<Mat>> assigned_factors(const PauliOp& word,
                                                     const ObservableSet& obs,
                                                     bool normalized_party1) {
  if (word.n != obs.parties.size())
    throw validation_error("assigned_factors: word width does not match party count");
  if (!word.xz_only())
    throw validation_error("assigned_factors: the assignment is undefined for Y factors");
  if (word.phase_exp != 0 && word.phase_exp != 2)
    throw validation_error("assigned_factors: word must carry sign +-1");

  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Mat> factors;
  factors.reserve(word.n);
  for (std::size_t q = 0; q < word.n; ++q) {
    const Mat& a0 = obs.parties[q].first;
    const Mat& a1 = obs.parties[q].second;
    bool xq = word.x.get(q), zq = word.z.get(q);
    if (!xq && !zq) {
      factors.push_back(Mat::Identity(a0.rows(), a0.cols()));
    } else if (q == 0) {
      Mat combo = xq ? Mat(a0 + a1) : Mat(a0 - a1);
      factors.push_back(normalized_party1 ? Mat(s * combo) : combo);
    } else {
      factors.push_back(xq ? a0 : a1);
    }
  }
  return {word.phase_exp == 2 ? -1.0 : 1.0, std::move(factors)};
}

std::vector<SosTerm> sos_recipe_max(std::size_t n) {
  StabilizerSet set = max_generators(n);
  const Root2 inv_sqrt2{Rational(0), Rational(1, 2)};  // 1/sqrt2 = sqrt2/2
  const Root2 half{Rational(1, 2), Rational(0)};
  std::vector<SosTerm> recipe;
  for (std::size_t i = 0; i < set.generators.size(); ++i) {
    recipe.push_back(SosTerm{i < 2 ? inv_sqrt2 : half, set.generators[i]});
  }
  return recipe;
}

std::vector<SosTerm> sos_recipe_appendixB(std::size_t n) {
  StabilizerSet set = construction2_generators(n, /*cyclic=*/true);
  const Root2 inv_sqrt2{Rational(0), Rational(1, 2)};
  const Root2 sqrt2 = Root2::sqrt2();
  const Root2 half{Rational(1, 2), Rational(0)};
  std::vector<SosTerm> recipe;
  const std::size_t last = set.generators.size() - 1;  // index of G_{n/2+1}
  for (std::size_t i = 0; i < set.generators.size(); ++i) {
    Root2 pref = half;
    if (i == 0 || i == last) pref = inv_sqrt2;
    if (i == 1) pref = sqrt2;
    recipe.push_back(SosTerm{pref, set.generators[i]});
  }
  return recipe;
}

double verify_sos(const BellExpression& expr, const ObservableSet& obs, const Root2& shift,
                  const std::vector<SosTerm>& recipe) {
  if (obs.parties.size() != expr.n_parties)
    throw validation_error("verify_sos: observable set does not match party count");
  obs.check();
  for (const SosTerm& t : recipe) {
    if (t.prefactor.sign() <= 0)
      throw validation_error("verify_sos: prefactors must be positive");
  }

  KronSum residual(obs.dims());
  residual.add_identity(shift.to_double());
  for (const auto& [label, coeff] : expr.terms) {
    residual.add(-coeff.to_double(), label_factors(label, obs));
  }
  for (const SosTerm& t : recipe) {
    auto [sign, factors] = assigned_factors(t.word, obs, /*normalized_party1=*/true);
    const double pref = t.prefactor.to_double();
    // (1 - G~)^2 = 1 - 2 G~ + G~^2, and G~^2 keeps the Kronecker structure.
    residual.add_identity(-pref);
    residual.add(2.0 * pref * sign, factors);
    std::vector<Mat> squares;
    squares.reserve(factors.size());
    for (const Mat& f : factors) squares.push_back(f * f);
    residual.add(-pref, std::move(squares));
  }
  return residual.op_norm();
}

SubspaceValue quantum_value_on_subspace(const BellExpression& expr, const StabilizerSet& set,
                                        const BellOptions& opts) {
  DenseOptions dense{opts.dense_limit};
  std::vector<Vec> basis = codeword_basis(set, dense);
  Mat b = bell_operator(expr, canonical_observables(set.n), opts);
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  Mat projected(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Vec bv = b * basis[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j) {
      projected(j, i) = basis[static_cast<std::size_t>(j)].dot(bv);
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(projected, Eigen::EigenvaluesOnly);
  return SubspaceValue{solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

BellExpression synth_max_inequality(std::size_t n, const BellOptions& opts) {
  StabilizerSet set = max_generators(n);
  const std::size_t k = k_min(n);
  std::vector<Root2> weights(set.generators.size(), Root2(1));
  BellExpression expr = bell_from_stabilizers(set, weights);
  expr.classical_bound = Root2(static_cast<std::int64_t>(k));
  // 2(sqrt2 - 1) + k = (k - 2) + 2 sqrt2
  expr.quantum_bound = Root2{Rational(static_cast<std::int64_t>(k) - 2), Rational(2)};
  if (opts.verify_classical && n <= opts.brute_limit) {
    ClassicalSolution brute = classical_bound(expr, opts);
    if (brute.value != *expr.classical_bound)
      throw bound_error("synth_max_inequality: brute-force classical bound " +
                        to_string(brute.value) + " differs from k_min = " + std::to_string(k));
  }
  return expr;
}

BellExpression synth_appendixB_inequality(std::size_t n, const BellOptions& opts) {
  if (n % 2 != 0 || n < 6)
    throw validation_error("synth_appendixB_inequality: defined for even n >= 6");
  StabilizerSet set = construction2_generators(n, /*cyclic=*/true);
  std::vector<Root2> weights(set.generators.size(), Root2(1));
  weights[1] = Root2(2);
  BellExpression expr = bell_from_stabilizers(set, weights);
  const std::int64_t half = static_cast<std::int64_t>(n) / 2;
  expr.classical_bound = Root2(half + 2);
  // n/2 + 2(2 sqrt2 - 1) = (n/2 - 2) + 4 sqrt2
  expr.quantum_bound = Root2{Rational(half - 2), Rational(4)};
  if (opts.verify_classical && n <= opts.brute_limit) {
    ClassicalSolution brute = classical_bound(expr, opts);
    if (brute.value != *expr.classical_bound)
      throw bound_error("synth_appendixB_inequality: brute-force classical bound " +
                        to_string(brute.value) + " differs from n/2 + 2");
  }
  return expr;
}

}  // namespace ges
