#include "gesbell/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace ges {

namespace {

// P_i alternates X (odd i) / Z (even i); 1-based as in the block tables.
enum class Letter { I, X, Z };

Letter alternating(std::size_t i) { return (i % 2) ? Letter::X : Letter::Z; }
Letter opposite(Letter p) {
  if (p == Letter::X) return Letter::Z;
  if (p == Letter::Z) return Letter::X;
  return Letter::I;
}

// Word builder that appends runs of letters and refuses to overflow; the
// constructions must land on exactly n qubits or something is wrong with
// the index bookkeeping, and that must never be papered over.
class WordBuilder {
 public:
  explicit WordBuilder(std::size_t n) : op_(PauliOp::identity(n)) {}

  void append(Letter p, std::size_t count) {
    if (pos_ + count > op_.n)
      throw error("construction bookkeeping error: word exceeds n qubits");
    for (std::size_t c = 0; c < count; ++c, ++pos_) {
      if (p == Letter::X) op_.x.set(pos_);
      if (p == Letter::Z) op_.z.set(pos_);
    }
  }

  PauliOp finish() {
    if (pos_ != op_.n)
      throw error("construction bookkeeping error: word has " + std::to_string(pos_) +
                  " of " + std::to_string(op_.n) + " qubits");
    return op_;
  }

 private:
  PauliOp op_;
  std::size_t pos_ = 0;
};

void set_letter(PauliOp& op, std::size_t qubit, Letter p) {
  if (p == Letter::X) op.x.set(qubit);
  if (p == Letter::Z) op.z.set(qubit);
}

}  // namespace

std::size_t k_min(std::size_t n) {
  if (n < 2) throw validation_error("k_min: n must be >= 2");
  std::size_t k = 2;
  while (k * (k - 1) / 2 < n - 1) ++k;
  // Cross-check against the closed form.
  std::size_t closed = static_cast<std::size_t>(
      std::ceil((1.0 + std::sqrt(8.0 * static_cast<double>(n) - 7.0)) / 2.0));
  if (closed != k) throw error("k_min: closed form disagrees with the defining inequality");
  return k;
}

BlockPartition block_partition(std::size_t n) {
  const std::size_t k = k_min(n);
  BlockPartition part;
  std::size_t next = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    std::size_t size;
    if (i == 1) {
      size = 1;
    } else if (i < k) {
      size = i - 1;
    } else {
      size = n - (k - 1) * (k - 2) / 2 - 1;
    }
    part.blocks.push_back({next, next + size - 1});
    next += size;
  }
  if (next != n) throw error("block_partition: sizes do not sum to n");
  return part;
}

StabilizerSet ghz_generators(std::size_t n) {
  if (n < 2) throw validation_error("ghz_generators: n must be >= 2");
  StabilizerSet set;
  set.n = n;
  PauliOp all_x = PauliOp::identity(n);
  for (std::size_t q = 0; q < n; ++q) all_x.x.set(q);
  set.generators.push_back(all_x);
  for (std::size_t q = 0; q + 1 < n; ++q) {
    PauliOp zz = PauliOp::identity(n);
    zz.z.set(q);
    zz.z.set(q + 1);
    set.generators.push_back(zz);
  }
  return set;
}

StabilizerSet construction2_generators(std::size_t n, bool cyclic) {
  if (n % 2 != 0)
    throw validation_error("construction2_generators: no odd-n construction is defined");
  if (n < 4) throw validation_error("construction2_generators: n must be >= 4");
  if (cyclic && n < 6)
    throw validation_error("construction2_generators: cyclic variant needs n >= 6");

  StabilizerSet set;
  set.n = n;

  PauliOp all_x = PauliOp::identity(n);
  for (std::size_t q = 0; q < n; ++q) all_x.x.set(q);
  set.generators.push_back(all_x);

  // 1-based qubit index modulo n: 0 -> n, n+1 -> 1.
  auto wrap = [n](std::size_t onebased) { return (onebased + n - 1) % n; };

  if (cyclic) {
    for (std::size_t i = 2; i <= n / 2 + 1; ++i) {
      PauliOp g = PauliOp::identity(n);
      set_letter(g, wrap(2 * i - 4), Letter::X);
      set_letter(g, wrap(2 * i - 3), Letter::Z);
      set_letter(g, wrap(2 * i - 2), Letter::Z);
      set_letter(g, wrap(2 * i - 1), Letter::X);
      set.generators.push_back(std::move(g));
    }
  } else {
    PauliOp g2 = PauliOp::identity(n);
    set_letter(g2, 0, Letter::Z);
    set_letter(g2, 1, Letter::Z);
    set_letter(g2, 2, Letter::X);
    set.generators.push_back(std::move(g2));
    for (std::size_t i = 3; i <= n / 2; ++i) {
      PauliOp g = PauliOp::identity(n);
      set_letter(g, 2 * i - 5, Letter::X);
      set_letter(g, 2 * i - 4, Letter::Z);
      set_letter(g, 2 * i - 3, Letter::Z);
      set_letter(g, 2 * i - 2, Letter::X);
      set.generators.push_back(std::move(g));
    }
    PauliOp last = PauliOp::identity(n);
    set_letter(last, n - 3, Letter::X);
    set_letter(last, n - 2, Letter::Z);
    set_letter(last, n - 1, Letter::Z);
    set.generators.push_back(std::move(last));
  }
  return set;
}

namespace {

StabilizerSet build_max_generators(std::size_t n) {
  const std::size_t k = k_min(n);
  StabilizerSet set;
  set.n = n;

  // Middle family i = 1..k-2: a run of P_i of length i+1 after the triangular
  // identity prefix, then nearest-neighbour pairs P_{q+1} for
  // q = i+2..q_max(i) with q_max(i) = k_min(n+i) - 1, then identities.
  for (std::size_t i = 1; i + 2 <= k; ++i) {
    WordBuilder word(n);
    word.append(Letter::I, (i - 1) * (i - 2) / 2);
    word.append(alternating(i), i + 1);
    const std::size_t q_max = k_min(n + i) - 1;
    for (std::size_t q = i + 2; q <= q_max; ++q) {
      word.append(Letter::I, q - 3);
      word.append(alternating(q + 1), 2);
    }
    // gamma(i) = (q_max^2 - q_max - 2i + 4)/2 qubits written so far.
    const std::size_t gamma = (q_max * q_max - q_max - 2 * i + 4) / 2;
    word.append(Letter::I, n - gamma);
    set.generators.push_back(word.finish());
  }

  {
    WordBuilder word(n);
    word.append(Letter::I, (k - 2) * (k - 3) / 2);
    word.append(alternating(k - 1), k);
    word.append(Letter::I, n - (k - 2) * (k - 3) / 2 - k);
    set.generators.push_back(word.finish());
  }
  {
    WordBuilder word(n);
    word.append(Letter::I, (k - 1) * (k - 2) / 2);
    word.append(alternating(k), n - (k - 1) * (k - 2) / 2);
    set.generators.push_back(word.finish());
  }
  return set;
}

StabilizerSet build_blockwise_generators(std::size_t n) {
  const std::size_t k = k_min(n);
  const BlockPartition part = block_partition(n);
  auto block_size = [&](std::size_t l) { return part.blocks[l - 1].size(); };

  StabilizerSet set;
  set.n = n;

  for (std::size_t g = 1; g <= k; ++g) {
    WordBuilder word(n);
    for (std::size_t l = 1; l <= k; ++l) {
      const std::size_t b = block_size(l);
      if (g + 2 <= k) {
        // Middle family. Block roles relative to g: a single trailing
        // letter in C_{g-1}, a full block of P_g in C_g, a leading letter
        // in C_{g+1}, interior nearest-neighbour pairs P_{l+1} in
        // C_{g+2}..C_{k-1}, and a conditional pair in C_k.
        if (l + 1 == g) {
          word.append(Letter::I, b - 1);
          word.append(alternating(g), 1);
        } else if (l == g) {
          word.append(alternating(g), b);
        } else if (l == g + 1) {  // g <= k-2 keeps this below l == k
          word.append(alternating(g + 2), 1);
          word.append(Letter::I, b - 1);
        } else if (l > g + 1 && l < k) {
          word.append(Letter::I, l - g - 2);
          word.append(alternating(l + 1), 2);
          word.append(Letter::I, g - 1);
        } else if (l == k) {
          // The closed form places a pair in the last block exactly when
          // its q-product reaches q = k, i.e. k_min(n+g) = k+1. The case
          // split printed with the block tables tests q_max(q_max+1)/2
          // against n-1 instead, which misfires whenever k_min(n+g) = k
          // while n-1 < k(k-1)/2 (already at n = 3). The reachability test
          // below agrees with the closed form and with the worked n = 3,
          // 4 and 7 operators.
          if (k_min(n + g) == k + 1) {
            word.append(Letter::I, k - g - 2);
            word.append(alternating(k + 1), 2);
            word.append(Letter::I, b - (k - g));
          } else {
            word.append(Letter::I, b);
          }
        } else {  // l <= g-2
          word.append(Letter::I, b);
        }
      } else if (g + 1 == k) {
        if (l + 2 == k) {
          word.append(Letter::I, b - 1);
          word.append(alternating(k - 1), 1);
        } else if (l + 1 == k) {
          word.append(alternating(k - 1), b);
        } else if (l == k) {
          word.append(alternating(k - 1), 1);
          word.append(Letter::I, b - 1);
        } else {
          word.append(Letter::I, b);
        }
      } else {  // g == k
        if (l + 1 == k) {
          word.append(Letter::I, b - 1);
          word.append(alternating(k), 1);
        } else if (l == k) {
          word.append(alternating(k), b);
        } else {
          word.append(Letter::I, b);
        }
      }
    }
    set.generators.push_back(word.finish());
  }
  return set;
}

std::string describe(const StabilizerSet& set) {
  std::string out;
  for (const PauliOp& g : set.generators) out += pauli_to_string(g) + " ";
  return out;
}

}  // namespace

StabilizerSet max_generators(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, StabilizerSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  StabilizerSet set = build_max_generators(n);
  cache[n] = set;
  return set;
}

StabilizerSet blockwise_generators(std::size_t n) {
  StabilizerSet set = build_blockwise_generators(n);
  StabilizerSet closed = max_generators(n);
  if (set.generators != closed.generators) {
    throw bound_error("blockwise_generators: block form disagrees with the closed form\n"
                      "  block form:  " + describe(set) + "\n" +
                      "  closed form: " + describe(closed));
  }
  return set;
}

std::vector<PauliOp> h_operators(std::size_t n) {
  const std::size_t k = k_min(n);
  if (n - k < 1)
    throw validation_error("h_operators: no completion operators exist for n = " +
                           std::to_string(n));
  const BlockPartition part = block_partition(n);

  // Fill blocks C_3, C_4, ... with nearest-neighbour pairs until n - k
  // operators exist: block C_{i+2} holds pairs at offsets j-1, j for
  // j = 1..i (the last block holds |C_k| - 1). Every pair carries the
  // letter opposite to the block's own generator letter.
  std::vector<PauliOp> ops;
  std::size_t remaining = n - k;
  for (std::size_t i = 1; remaining > 0; ++i) {
    if (i + 2 > k)
      throw error("h_operators: ran out of blocks with operators still owed");
    const auto& block = part.blocks[i + 2 - 1];
    const std::size_t capacity = block.size() - 1;
    const std::size_t take = std::min({i, remaining, capacity});
    for (std::size_t j = 1; j <= take; ++j) {
      PauliOp h = PauliOp::identity(n);
      const std::size_t start = (i * i + i + 2) / 2 + (j - 1);  // 0-based qubit
      if (start + 1 > block.last)
        throw error("h_operators: pair escapes its block");
      set_letter(h, start, alternating(i + 1));
      set_letter(h, start + 1, alternating(i + 1));
      ops.push_back(std::move(h));
    }
    remaining -= take;
  }
  if (ops.size() != n - k) throw error("h_operators: produced wrong count");
  return ops;
}

bool unique_matrix_independent(const std::vector<PauliOp>& ops) {
  for (const PauliOp& op : ops) {
    if (!op.xz_only())
      throw validation_error("unique_matrix_independent: operators must be over X, Z, 1");
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    bool has_unique = false;
    for (std::size_t q = 0; q < ops[i].n && !has_unique; ++q) {
      Letter mine = ops[i].x.get(q) ? Letter::X : (ops[i].z.get(q) ? Letter::Z : Letter::I);
      if (mine == Letter::I) continue;
      bool unique = true;
      for (std::size_t j = 0; j < ops.size(); ++j) {
        if (j == i) continue;
        Letter theirs =
            ops[j].x.get(q) ? Letter::X : (ops[j].z.get(q) ? Letter::Z : Letter::I);
        if (theirs != Letter::I && theirs != opposite(mine)) {
          unique = false;
          break;
        }
      }
      if (unique) has_unique = true;
    }
    if (!has_unique) return false;
  }
  return true;
}

}  // namespace ges
