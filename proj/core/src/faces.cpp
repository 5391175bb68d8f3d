#include "gesbell/faces.hpp"

#include <cmath>
#include <string>

#include "gesbell/constructions.hpp"

namespace ges {

StabilizerSet signed_stabilizer(std::size_t n, const std::vector<int>& signs) {
  StabilizerSet set = max_generators(n);
  std::vector<PauliOp> completions = h_operators(n);
  if (signs.size() != completions.size())
    throw validation_error("signed_stabilizer: expected " +
                           std::to_string(completions.size()) + " signs, got " +
                           std::to_string(signs.size()));
  for (std::size_t i = 0; i < completions.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw validation_error("signed_stabilizer: signs must be +1 or -1");
    if (signs[i] == -1) {
      completions[i].phase_exp = static_cast<std::uint8_t>((completions[i].phase_exp + 2) & 3);
    }
    set.generators.push_back(std::move(completions[i]));
  }
  return set;
}

Behaviour behaviour(const Vec& state, const ObservableSet& obs,
                    const std::vector<CorrelatorLabel>& labels) {
  obs.check();
  Eigen::Index total = 1;
  for (Eigen::Index d : obs.dims()) total *= d;
  if (state.size() != total) throw validation_error("behaviour: state dimension mismatch");

  Behaviour beh;
  beh.labels = labels;
  beh.values.resize(static_cast<Eigen::Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::vector<Mat> factors;
    factors.reserve(obs.parties.size());
    for (const auto& [a0, a1] : obs.parties) factors.push_back(Mat::Identity(a0.rows(), a0.rows()));
    for (const auto& [party, setting] : labels[i]) {
      if (party < 1 || party > obs.parties.size())
        throw validation_error("behaviour: label references an absent party");
      factors[party - 1] = setting == 0 ? obs.parties[party - 1].first
                                        : obs.parties[party - 1].second;
    }
    KronSum op(obs.dims());
    op.add(1.0, std::move(factors));
    std::complex<double> val = state.dot(op.apply(state));
    if (std::abs(val.imag()) > 1e-9)
      throw error("behaviour: expectation value has an imaginary part");
    if (std::abs(val.real()) > 1.0 + 1e-9)
      throw error("behaviour: expectation value outside [-1, 1]");
    beh.values[static_cast<Eigen::Index>(i)] = val.real();
  }
  return beh;
}

namespace {

CorrelatorLabel label_of_word(const PauliOp& word) {
  if (!word.xz_only() || word.phase_exp != 0)
    throw validation_error("label_of_word: expected a sign-free word over X, Z, 1");
  CorrelatorLabel label;
  for (std::size_t q = 0; q < word.n; ++q) {
    if (word.x.get(q)) label.emplace_back(q + 1, 0);
    if (word.z.get(q)) label.emplace_back(q + 1, 1);
  }
  if (label.empty()) throw validation_error("label_of_word: empty support");
  return label;
}

}  // namespace

FaceReport face_report(std::size_t n, const BellOptions& opts) {
  const std::size_t k = k_min(n);
  const std::size_t t = n - k;
  if (t > 20) throw resource_error("face_report: too many signed states");

  FaceReport report;
  report.n = n;
  report.n_states = std::size_t{1} << t;

  BellExpression expr = synth_max_inequality(n, opts);
  report.expected = *expr.quantum_bound;
  ObservableSet obs = canonical_observables(n);
  Mat bell_op = bell_operator(expr, obs, opts);
  DenseOptions dense{opts.dense_limit};

  std::vector<PauliOp> completions = t > 0 ? h_operators(n) : std::vector<PauliOp>{};

  std::vector<Vec> states;
  states.reserve(report.n_states);
  for (std::size_t pattern = 0; pattern < report.n_states; ++pattern) {
    std::vector<int> signs(t, 1);
    for (std::size_t b = 0; b < t; ++b) {
      if ((pattern >> b) & 1) signs[b] = -1;
    }
    StabilizerSet set = t > 0 ? signed_stabilizer(n, signs) : max_generators(n);
    std::vector<Vec> basis = codeword_basis(set, dense);
    if (basis.size() != 1)
      throw error("face_report: signed stabilizer does not pin a unique state");
    Vec psi = std::move(basis.front());

    const double value = std::real(psi.dot(bell_op * psi));
    const double residual = std::abs(value - report.expected.to_double());
    report.bell_residuals.push_back(residual);
    if (residual > 1e-9)
      throw bound_error("face_report: constructed behaviour does not maximally violate (state " +
                        std::to_string(pattern) + ", residual " + std::to_string(residual) + ")");
    states.push_back(std::move(psi));
  }

  if (t == 0) {
    report.face_dim = 0;
    return report;
  }

  // Witness labels: every nonempty product of completion operators, plus one
  // generator that avoids party 1 (the last one always does for k >= 3).
  std::vector<CorrelatorLabel> labels;
  for (std::size_t subset = 1; subset < report.n_states; ++subset) {
    PauliOp prod = PauliOp::identity(n);
    for (std::size_t b = 0; b < t; ++b) {
      if ((subset >> b) & 1) prod = multiply(prod, completions[b]);
    }
    labels.push_back(label_of_word(prod));
  }
  labels.push_back(label_of_word(max_generators(n).generators.back()));

  Eigen::MatrixXd rows(report.n_states, labels.size());
  for (std::size_t s = 0; s < report.n_states; ++s) {
    rows.row(static_cast<Eigen::Index>(s)) = behaviour(states[s], obs, labels).values;
  }
  Eigen::MatrixXd diffs(report.n_states - 1, labels.size());
  for (std::size_t s = 1; s < report.n_states; ++s) {
    diffs.row(static_cast<Eigen::Index>(s - 1)) = rows.row(static_cast<Eigen::Index>(s)) - rows.row(0);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs);
  const auto& sing = svd.singularValues();
  int rank = 0;
  if (sing.size() > 0 && sing[0] > 0) {
    for (Eigen::Index i = 0; i < sing.size(); ++i) {
      if (sing[i] > 1e-8 * sing[0]) ++rank;
    }
  }
  report.face_dim = rank;
  return report;
}

}  // namespace ges
