#include "gesbell/stabilizer.hpp"

#include <string>

#include "gesbell/dense.hpp"

namespace ges {

GF2Matrix symplectic_rows(const StabilizerSet& set) {
  GF2Matrix m(2 * set.n);
  for (const PauliOp& g : set.generators) {
    if (g.n != set.n) throw validation_error("stabilizer: generator width mismatch");
    BitVec row(2 * set.n);
    for (std::size_t k = 0; k < set.n; ++k) {
      if (g.x.get(k)) row.set(k);
      if (g.z.get(k)) row.set(set.n + k);
    }
    m.append_row(std::move(row));
  }
  return m;
}

ValidationReport validate(const StabilizerSet& set, const ValidateOptions& opts) {
  if (set.generators.empty()) throw validation_error("validate: empty generator list");
  for (const PauliOp& g : set.generators) {
    if (g.n != set.n) throw validation_error("validate: generator width mismatch");
    if (!g.is_hermitian())
      throw validation_error("validate: generator is not Hermitian: " + pauli_to_string(g));
  }

  ValidationReport report;
  const std::size_t k = set.generators.size();

  report.abelian = true;
  for (std::size_t i = 0; i < k && report.abelian; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!commutes(set.generators[i], set.generators[j])) {
        report.abelian = false;
        break;
      }
    }
  }

  GF2Matrix rows = symplectic_rows(set);
  report.rank = gf2_rank(rows);
  report.independent = report.rank == k;

  if (report.independent) {
    // Trivial kernel: the only subset product equal to +-1 is the empty one.
    report.minus_identity_free = true;
  } else {
    GF2Matrix kernel = gf2_kernel(rows);
    const std::size_t kd = kernel.n_rows();
    if (kd > opts.kernel_cap_log2) {
      throw resource_error("validate: kernel dimension " + std::to_string(kd) +
                           " exceeds enumeration cap 2^" +
                           std::to_string(opts.kernel_cap_log2));
    }
    report.minus_identity_free = true;
    // Every nonempty kernel combination selects a subset of generators whose
    // ordered product is +-1; -1 anywhere kills the stabilizer.
    for (std::uint64_t combo = 1; combo < (std::uint64_t{1} << kd); ++combo) {
      BitVec select(k);
      for (std::size_t b = 0; b < kd; ++b) {
        if ((combo >> b) & 1) select ^= kernel.rows[b];
      }
      PauliOp prod = PauliOp::identity(set.n);
      for (std::size_t i = 0; i < k; ++i) {
        if (select.get(i)) prod = multiply(prod, set.generators[i]);
      }
      if (!prod.is_identity_word())
        throw error("validate: kernel element does not multiply to a scalar");
      if (prod.phase_exp == 2) {
        report.minus_identity_free = false;
        break;
      }
    }
  }

  if (report.abelian && report.minus_identity_free) {
    report.dim_log2 = static_cast<int>(set.n - report.rank);
  } else {
    report.dim_log2 = -1;
  }
  return report;
}

Mat projector(const StabilizerSet& set, const DenseOptions& opts) {
  ValidationReport report = validate(set);
  if (!report.valid()) throw validation_error("projector: set stabilizes no subspace");
  if (set.n > opts.dense_limit)
    throw resource_error("projector: n exceeds dense limit " +
                         std::to_string(opts.dense_limit));
  const Eigen::Index dim = Eigen::Index{1} << set.n;
  Mat p = Mat::Identity(dim, dim);
  // Dependent generators contribute redundant factors; harmless, skip via
  // an independence filter so the trace check below stays meaningful.
  GF2Eliminator elim(2 * set.n);
  GF2Matrix rows = symplectic_rows(set);
  for (std::size_t i = 0; i < set.generators.size(); ++i) {
    if (!elim.try_insert(rows.rows[i])) continue;
    p = 0.5 * (p + apply_pauli_left(set.generators[i], p));
  }
  double trace_err = std::abs(p.trace().real() - static_cast<double>(report.subspace_dim()));
  if (trace_err > 1e-9 || std::abs(p.trace().imag()) > 1e-9)
    throw error("projector: trace does not match subspace dimension");
  return p;
}

std::vector<Vec> codeword_basis(const StabilizerSet& set, const DenseOptions& opts) {
  Mat p = projector(set, opts);
  Eigen::SelfAdjointEigenSolver<Mat> solver(p);
  std::vector<Vec> basis;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    if (solver.eigenvalues()[i] > 0.5) {
      Vec v = solver.eigenvectors().col(i);
      fix_phase(v);
      basis.push_back(std::move(v));
    }
  }
  for (const Vec& v : basis) {
    for (const PauliOp& g : set.generators) {
      if ((apply_pauli(g, v) - v).norm() > 1e-9)
        throw error("codeword_basis: basis vector not fixed by a generator");
    }
  }
  return basis;
}

}  // namespace ges
