#pragma once

#include <vector>

#include "gesbell/bell.hpp"
#include "gesbell/stabilizer.hpp"

namespace ges {

// Real vector of expectation values for a declared correlator list.
struct Behaviour {
  std::vector<CorrelatorLabel> labels;
  Eigen::VectorXd values;
};

// max_generators(n) together with the completion operators, the latter with
// the requested signs (+1/-1, one per completion operator). Stabilizes a
// one-dimensional subspace for every sign pattern.
StabilizerSet signed_stabilizer(std::size_t n, const std::vector<int>& signs);

// Expectation values of the labelled correlators in the given state.
Behaviour behaviour(const Vec& state, const ObservableSet& obs,
                    const std::vector<CorrelatorLabel>& labels);

struct FaceReport {
  std::size_t n = 0;
  std::size_t n_states = 0;  // 2^{n - k_min}
  int face_dim = -1;
  Root2 expected;                      // maximal quantum value
  std::vector<double> bell_residuals;  // |<B> - beta_Q| per signed state
};

// Builds the 2^{n-k_min} signed stabilizer states, certifies that each one
// maximally violates the synthesized inequality (hard error otherwise), and
// returns the affine dimension of their behaviours over the witness label
// set: all nonempty products of completion operators plus one generator.
FaceReport face_report(std::size_t n, const BellOptions& opts = {});

inline int face_dimension(std::size_t n, const BellOptions& opts = {}) {
  return face_report(n, opts).face_dim;
}

}  // namespace ges
