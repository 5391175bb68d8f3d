// Command-line front end: construction, GME certification, Bell bounds,
// sum-of-squares checks, self-testing ingredients and face dimensions.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gesbell/bell.hpp"
#include "gesbell/constructions.hpp"
#include "gesbell/faces.hpp"
#include "gesbell/gme.hpp"
#include "gesbell/io.hpp"
#include "gesbell/selftest.hpp"
#include "gesbell/stabilizer.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;
constexpr int kExitResource = 4;

struct CommonOpts {
  std::size_t dense_limit = 12;
  std::size_t brute_limit = 14;
  std::size_t oracle_limit = 24;
  std::size_t trials = 20;
  std::uint64_t seed = 1234;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool as_json = false;

  ges::BellOptions bell() const { return ges::BellOptions{brute_limit, dense_limit, true}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--dense-limit", opts.dense_limit, "max qubits for dense linear algebra");
  cmd->add_option("--brute-limit", opts.brute_limit, "max parties for the classical brute force");
  cmd->add_option("--oracle-limit", opts.oracle_limit, "max qubits for the bipartition oracle");
  cmd->add_option("--trials", opts.trials, "random observable sets per SOS check");
  cmd->add_option("--seed", opts.seed, "seed for randomized checks");
  cmd->add_option("--workers", opts.workers, "worker threads for independent trials");
  cmd->add_flag("--json", opts.as_json, "emit machine-readable JSON");
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. Exceptions are
// rethrown on the calling thread.
void parallel_indices(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count ? count : 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

json root2_json(const ges::Root2& v) {
  return json{{"a", v.a.to_double()}, {"b", v.b.to_double()}, {"value", v.to_double()}};
}

ges::StabilizerSet family_generators(const std::string& family, std::size_t n) {
  if (family == "max") return ges::max_generators(n);
  if (family == "chsh") return ges::max_generators(2);
  if (family == "appb") return ges::construction2_generators(n, /*cyclic=*/true);
  throw ges::validation_error("unknown family: " + family);
}

ges::BellExpression family_expression(const std::string& family, std::size_t n,
                                      const ges::BellOptions& opts) {
  if (family == "max") return ges::synth_max_inequality(n, opts);
  if (family == "chsh") return ges::synth_max_inequality(2, opts);
  if (family == "appb") return ges::synth_appendixB_inequality(n, opts);
  throw ges::validation_error("unknown family: " + family);
}

std::vector<ges::SosTerm> family_recipe(const std::string& family, std::size_t n) {
  if (family == "max") return ges::sos_recipe_max(n);
  if (family == "chsh") return ges::sos_recipe_max(2);
  if (family == "appb") return ges::sos_recipe_appendixB(n);
  throw ges::validation_error("unknown family: " + family);
}

int run_check_gme(const std::string& path, const CommonOpts& opts) {
  ges::StabilizerSet set = ges::read_generator_file(path);
  ges::ValidationReport report = ges::validate(set);
  json out;
  out["N"] = set.n;
  out["validation"] = json::parse(ges::validation_report_json(report));
  if (!report.valid()) {
    out["error"] = "generators do not stabilize a nontrivial subspace";
    std::cout << (opts.as_json ? out.dump(2) : out["error"].get<std::string>()) << "\n";
    return kExitValidation;
  }
  ges::KSubspace ks = ges::pair_vectors(set);
  bool rank_criterion = ks.dim == set.n - 1;
  out["dim_K"] = ks.dim;
  out["rank_criterion"] = rank_criterion;
  bool oracle_run = set.n <= opts.oracle_limit;
  if (oracle_run) {
    out["oracle"] = ges::is_gme_oracle(set, ges::OracleOptions{opts.oracle_limit});
  }
  if (opts.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "N = " << set.n << ", dim K = " << ks.dim
              << ", rank criterion: " << (rank_criterion ? "GME" : "not GME");
    if (oracle_run) {
      std::cout << ", oracle: " << (out["oracle"].get<bool>() ? "GME" : "not GME");
    }
    std::cout << "\n";
  }
  return kExitPass;
}

int run_construct(const std::string& kind, std::size_t n, bool cyclic) {
  if (kind == "ghz") {
    std::cout << ges::write_generator_text(ges::ghz_generators(n));
  } else if (kind == "c2") {
    std::cout << ges::write_generator_text(ges::construction2_generators(n, cyclic));
  } else if (kind == "max") {
    std::cout << ges::write_generator_text(ges::max_generators(n));
  } else if (kind == "blockwise") {
    std::cout << ges::write_generator_text(ges::blockwise_generators(n));
  } else if (kind == "h") {
    for (const ges::PauliOp& h : ges::h_operators(n)) {
      std::cout << ges::pauli_to_string(h) << "\n";
    }
  } else {
    throw ges::validation_error("unknown construction: " + kind);
  }
  return kExitPass;
}

struct SosOutcome {
  double max_residual = 0.0;
  std::size_t trials = 0;
};

SosOutcome run_sos_trials(const std::string& family, std::size_t n, Eigen::Index local_dim,
                          const CommonOpts& opts, const ges::BellExpression& expr) {
  std::vector<ges::SosTerm> recipe = family_recipe(family, n);
  std::vector<double> residuals(opts.trials, 0.0);
  parallel_indices(opts.trials, opts.workers, [&](std::size_t t) {
    ges::ObservableSet obs = ges::random_observables(n, local_dim, opts.seed + t);
    residuals[t] = ges::verify_sos(expr, obs, *expr.quantum_bound, recipe);
  });
  SosOutcome outcome;
  outcome.trials = opts.trials;
  for (double r : residuals) outcome.max_residual = std::max(outcome.max_residual, r);
  return outcome;
}

int run_certify(std::size_t n, const CommonOpts& opts) {
  json cert;
  cert["n"] = n;
  cert["k_min"] = ges::k_min(n);
  cert["seed"] = opts.seed;
  cert["limits"] = {{"dense_limit", opts.dense_limit},
                    {"brute_limit", opts.brute_limit},
                    {"oracle_limit", opts.oracle_limit},
                    {"trials", opts.trials},
                    {"workers", opts.workers}};
  cert["stages"] = json::array();
  int exit_code = kExitPass;
  std::string failed_stage;

  auto stage = [&](const std::string& name, int fail_code, auto&& body) {
    if (exit_code != kExitPass) return;
    json entry;
    entry["name"] = name;
    try {
      bool ok = body(entry);
      entry["pass"] = ok;
      if (!ok) {
        exit_code = fail_code;
        failed_stage = name;
      }
    } catch (const ges::resource_error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
      exit_code = kExitResource;
      failed_stage = name;
    } catch (const ges::bound_error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
      exit_code = kExitBound;
      failed_stage = name;
    } catch (const ges::error& e) {
      entry["pass"] = false;
      entry["error"] = e.what();
      exit_code = fail_code;
      failed_stage = name;
    }
    cert["stages"].push_back(entry);
  };

  ges::StabilizerSet set;
  ges::ValidationReport report;
  ges::BellExpression expr;

  stage("construct", kExitValidation, [&](json& entry) {
    set = ges::max_generators(n);
    ges::StabilizerSet blocks = ges::blockwise_generators(n);  // throws on mismatch
    entry["generators"] = json::array();
    for (const auto& g : set.generators) entry["generators"].push_back(ges::pauli_to_string(g));
    entry["blockwise_agrees"] = blocks.generators == set.generators;
    return entry["blockwise_agrees"].get<bool>();
  });

  stage("validate", kExitValidation, [&](json& entry) {
    report = ges::validate(set);
    entry["report"] = json::parse(ges::validation_report_json(report));
    return report.valid() && report.independent &&
           report.rank == ges::k_min(n);
  });

  stage("gme", kExitValidation, [&](json& entry) {
    ges::KSubspace ks = ges::pair_vectors(set);
    entry["dim_K"] = ks.dim;
    bool rank_criterion = ks.dim == n - 1;
    entry["rank_criterion"] = rank_criterion;
    bool ok = rank_criterion;
    if (n <= opts.oracle_limit) {
      bool oracle = ges::is_gme_oracle(set, ges::OracleOptions{opts.oracle_limit});
      entry["oracle"] = oracle;
      ok = ok && oracle == rank_criterion && oracle;
    } else {
      entry["oracle"] = nullptr;
    }
    return ok;
  });

  stage("bell_synth", kExitBound, [&](json& entry) {
    // Brute-force verification happens in its own stage below.
    ges::BellOptions bopts = opts.bell();
    bopts.verify_classical = false;
    expr = ges::synth_max_inequality(n, bopts);
    entry["classical_bound"] = root2_json(*expr.classical_bound);
    entry["quantum_bound"] = root2_json(*expr.quantum_bound);
    entry["terms"] = expr.terms.size();
    return true;
  });

  stage("classical_brute", kExitBound, [&](json& entry) {
    if (n > opts.brute_limit) {
      entry["skipped"] = true;
      return true;
    }
    entry["skipped"] = false;
    ges::ClassicalSolution sol = ges::classical_bound(expr, opts.bell());
    entry["value"] = root2_json(sol.value);
    return sol.value == *expr.classical_bound;
  });

  stage("sos", kExitBound, [&](json& entry) {
    if (n > opts.dense_limit) {
      entry["skipped"] = true;
      return true;
    }
    entry["skipped"] = false;
    SosOutcome outcome = run_sos_trials("max", n, 2, opts, expr);
    entry["trials"] = outcome.trials;
    entry["max_residual"] = outcome.max_residual;
    return outcome.max_residual <= 1e-9;
  });

  stage("subspace_value", kExitBound, [&](json& entry) {
    if (n > opts.dense_limit) {
      entry["skipped"] = true;
      return true;
    }
    entry["skipped"] = false;
    ges::SubspaceValue value = ges::quantum_value_on_subspace(expr, set, opts.bell());
    entry["min"] = value.min;
    entry["max"] = value.max;
    const double target = expr.quantum_bound->to_double();
    return std::abs(value.min - target) <= 1e-9 && std::abs(value.max - target) <= 1e-9;
  });

  stage("faces", kExitBound, [&](json& entry) {
    if (n > opts.dense_limit) {
      entry["skipped"] = true;
      return true;
    }
    entry["skipped"] = false;
    ges::BellOptions bopts = opts.bell();
    bopts.verify_classical = false;
    ges::FaceReport face = ges::face_report(n, bopts);
    const std::size_t expected = (std::size_t{1} << (n - ges::k_min(n))) - 1;
    entry["dim"] = face.face_dim;
    entry["expected_dim"] = expected;
    double worst = 0.0;
    for (double r : face.bell_residuals) worst = std::max(worst, r);
    entry["max_bell_residual"] = worst;
    return face.face_dim >= 0 && static_cast<std::size_t>(face.face_dim) == expected;
  });

  cert["pass"] = exit_code == kExitPass;
  if (exit_code != kExitPass) cert["failed_stage"] = failed_stage;

  if (opts.as_json) {
    std::cout << cert.dump(2) << "\n";
  } else {
    for (const auto& entry : cert["stages"]) {
      std::cout << (entry["pass"].get<bool>() ? "PASS " : "FAIL ")
                << entry["name"].get<std::string>();
      if (entry.contains("skipped") && entry["skipped"].get<bool>()) std::cout << " (skipped)";
      if (entry.contains("error")) std::cout << ": " << entry["error"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << (cert["pass"].get<bool>() ? "CERTIFIED" : "FAILED") << " n=" << n << "\n";
  }
  return exit_code;
}

int run_faces(std::size_t n, const CommonOpts& opts) {
  ges::BellOptions bopts = opts.bell();
  ges::FaceReport report = ges::face_report(n, bopts);
  const std::size_t expected = (std::size_t{1} << (n - ges::k_min(n))) - 1;
  if (opts.as_json) {
    json out;
    out["n"] = n;
    out["face_dim"] = report.face_dim;
    out["expected_dim"] = expected;
    out["max_value"] = root2_json(report.expected);
    out["states"] = report.n_states;
    out["bell_residuals"] = report.bell_residuals;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << n << ": face dimension " << report.face_dim << " (formula "
              << expected << "), maximal value " << report.expected.to_double() << "\n";
    for (std::size_t i = 0; i < report.bell_residuals.size(); ++i) {
      std::printf("  state %3zu: |<B> - beta_Q| = %.3e\n", i, report.bell_residuals[i]);
    }
  }
  return report.face_dim >= 0 && static_cast<std::size_t>(report.face_dim) == expected
             ? kExitPass
             : kExitBound;
}

int run_selftest(std::size_t n, const CommonOpts& opts) {
  ges::StabilizerSet set = ges::max_generators(n);
  ges::ObservableSet obs = ges::canonical_observables(n);
  ges::DenseOptions dense{opts.dense_limit};
  std::vector<ges::Vec> basis = ges::codeword_basis(set, dense);

  json out;
  out["n"] = n;
  bool ok = true;

  json table = json::array();
  for (std::size_t c = 0; c < basis.size(); ++c) {
    ges::StabilizationReport rep = ges::verify_stabilization(obs, basis[c], set);
    ok = ok && rep.pass;
    table.push_back({{"codeword", c}, {"residuals", rep.residuals}, {"pass", rep.pass}});
  }
  out["stabilization"] = table;

  // Propagated pairs at every site must satisfy the involution relations.
  double worst_pair = 0.0;
  for (std::size_t party = 1; party <= n; ++party) {
    ges::InvolutionPair pair = ges::site_pair(obs, party);
    ges::Mat id = ges::Mat::Identity(pair.xt.rows(), pair.xt.cols());
    worst_pair = std::max({worst_pair, (pair.xt * pair.xt - id).norm(),
                           (pair.zt * pair.zt - id).norm(),
                           (pair.xt * pair.zt + pair.zt * pair.xt).norm()});
  }
  out["site_pair_residual"] = worst_pair;
  ok = ok && worst_pair <= 1e-10;

  // Round-trip canonicalization on seeded conjugated pairs, d in {2,...,8}.
  std::mt19937_64 rng(opts.seed);
  double worst_roundtrip = 0.0;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    Eigen::Index half = static_cast<Eigen::Index>(1 + (t % 4));
    ges::InvolutionPair pair = ges::random_conjugated_pair(rng, half);
    ges::Mat u = ges::canonicalize_pair(pair);
    ges::Mat x(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    ges::Mat id = ges::Mat::Identity(half, half);
    worst_roundtrip = std::max(
        {worst_roundtrip, (u * pair.xt * u.adjoint() - ges::kron(x, id)).norm(),
         (u * pair.zt * u.adjoint() - ges::kron(z, id)).norm()});
  }
  out["canonicalize_residual"] = worst_roundtrip;
  ok = ok && worst_roundtrip <= 1e-8;
  out["pass"] = ok;
  out["note"] =
      "certifies the canonical realization and the algebraic relations; "
      "statements over arbitrary purifications are outside numerical reach";

  if (opts.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n = " << n << ": stabilization residuals";
    for (const auto& row : table) {
      double worst = 0.0;
      for (double r : row["residuals"].get<std::vector<double>>()) worst = std::max(worst, r);
      std::printf(" %.2e", worst);
    }
    std::printf("\n  site pairs %.2e, canonicalization round-trip %.2e -> %s\n", worst_pair,
                worst_roundtrip, ok ? "PASS" : "FAIL");
    std::cout << "  note: " << out["note"].get<std::string>() << "\n";
  }
  return ok ? kExitPass : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer subspaces, genuine multipartite entanglement and Bell certificates"};
  app.require_subcommand(1);

  // check-gme
  auto* check = app.add_subcommand("check-gme", "decide GME for a generator file");
  std::string check_file;
  CommonOpts check_opts;
  check->add_option("file,--file", check_file, "generator file (text or JSON)")->required();
  add_common(check, check_opts);

  // construct
  auto* construct = app.add_subcommand("construct", "emit generator families");
  std::string construct_kind;
  std::size_t construct_n = 0;
  bool construct_cyclic = false;
  construct->add_option("kind", construct_kind, "ghz | c2 | max | blockwise | h")->required();
  construct->add_option("--n", construct_n, "qubit count")->required();
  construct->add_flag("--cyclic", construct_cyclic, "cyclic variant of c2 (even n >= 6)");

  // bell
  auto* bell = app.add_subcommand("bell", "Bell expressions and bounds");
  bell->require_subcommand(1);
  std::string bell_family = "max";
  std::size_t bell_n = 3;
  std::string bell_file;
  Eigen::Index bell_dim = 2;
  CommonOpts bell_opts;

  auto add_bell_source = [&](CLI::App* cmd) {
    cmd->add_option("--family", bell_family, "max | appb | chsh");
    cmd->add_option("--n", bell_n, "party count");
    cmd->add_option("--file", bell_file, "expression JSON instead of a family");
    add_common(cmd, bell_opts);
  };
  auto* bell_synth = bell->add_subcommand("synth", "synthesize an expression as JSON");
  add_bell_source(bell_synth);
  auto* bell_classical = bell->add_subcommand("classical", "brute-force classical bound");
  add_bell_source(bell_classical);
  auto* bell_quantum = bell->add_subcommand("quantum", "canonical Bell operator spectrum");
  add_bell_source(bell_quantum);
  auto* bell_sos = bell->add_subcommand("sos", "sum-of-squares residual over random observables");
  add_bell_source(bell_sos);
  bell_sos->add_option("--local-dim", bell_dim, "local dimension of random observables");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "self-testing ingredients");
  selftest->require_subcommand(1);
  auto* selftest_verify = selftest->add_subcommand("verify", "canonical pipeline residuals");
  std::size_t selftest_n = 3;
  CommonOpts selftest_opts;
  selftest_verify->add_option("--n", selftest_n, "qubit count")->required();
  add_common(selftest_verify, selftest_opts);

  // faces
  auto* faces = app.add_subcommand("faces", "face dimension of the quantum set");
  std::size_t faces_n = 4;
  CommonOpts faces_opts;
  faces->add_option("--n", faces_n, "qubit count")->required();
  add_common(faces, faces_opts);

  // certify
  auto* certify = app.add_subcommand("certify", "full certification pipeline");
  std::size_t certify_n = 3;
  CommonOpts certify_opts;
  certify->add_option("--n", certify_n, "qubit count")->required();
  add_common(certify, certify_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check_gme(check_file, check_opts);
    if (*construct) return run_construct(construct_kind, construct_n, construct_cyclic);

    if (*bell) {
      ges::BellExpression expr;
      std::size_t n = bell_n;
      if (!bell_file.empty()) {
        std::ifstream in(bell_file);
        if (!in) throw ges::format_error("cannot open " + bell_file);
        std::stringstream buf;
        buf << in.rdbuf();
        expr = ges::bell_expression_from_json(buf.str());
        n = expr.n_parties;
      } else {
        if (bell_family == "chsh") n = 2;
        ges::BellOptions bopts = bell_opts.bell();
        bopts.verify_classical = false;
        expr = family_expression(bell_family, n, bopts);
      }

      if (*bell_synth) {
        std::cout << ges::bell_expression_json(expr) << "\n";
        return kExitPass;
      }
      if (*bell_classical) {
        ges::ClassicalSolution sol = ges::classical_bound(expr, bell_opts.bell());
        if (bell_opts.as_json) {
          json out;
          out["value"] = root2_json(sol.value);
          json signs = json::array();
          for (auto [s0, s1] : sol.signs) signs.push_back({s0, s1});
          out["witness"] = signs;
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "classical bound = " << ges::to_string(sol.value) << " = "
                    << sol.value.to_double() << "\n";
        }
        return kExitPass;
      }
      if (*bell_quantum) {
        ges::Mat op = ges::bell_operator(expr, ges::canonical_observables(n), bell_opts.bell());
        Eigen::SelfAdjointEigenSolver<ges::Mat> solver(op, Eigen::EigenvaluesOnly);
        double top = solver.eigenvalues().maxCoeff();
        ges::StabilizerSet set = family_generators(bell_file.empty() ? bell_family : "max", n);
        ges::SubspaceValue sub = ges::quantum_value_on_subspace(expr, set, bell_opts.bell());
        if (bell_opts.as_json) {
          json out;
          out["max_eigenvalue"] = top;
          out["subspace_min"] = sub.min;
          out["subspace_max"] = sub.max;
          if (expr.quantum_bound) out["quantum_bound"] = root2_json(*expr.quantum_bound);
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "max eigenvalue " << top << ", subspace value [" << sub.min << ", "
                    << sub.max << "]";
          if (expr.quantum_bound) std::cout << ", closed form " << expr.quantum_bound->to_double();
          std::cout << "\n";
        }
        return kExitPass;
      }
      if (*bell_sos) {
        if (!expr.quantum_bound)
          throw ges::validation_error("bell sos: expression carries no quantum bound");
        SosOutcome outcome =
            run_sos_trials(bell_family, n, bell_dim, bell_opts, expr);
        if (bell_opts.as_json) {
          json out;
          out["trials"] = outcome.trials;
          out["max_residual"] = outcome.max_residual;
          out["pass"] = outcome.max_residual <= 1e-9;
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "sos residual over " << outcome.trials
                    << " random observable sets: " << outcome.max_residual << "\n";
        }
        return outcome.max_residual <= 1e-9 ? kExitPass : kExitBound;
      }
    }

    if (*selftest) return run_selftest(selftest_n, selftest_opts);
    if (*faces) return run_faces(faces_n, faces_opts);
    if (*certify) return run_certify(certify_n, certify_opts);
  } catch (const ges::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ges::bound_error& e) {
    std::cerr << "bound mismatch: " << e.what() << "\n";
    return kExitBound;
  } catch (const ges::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitPass;
}
