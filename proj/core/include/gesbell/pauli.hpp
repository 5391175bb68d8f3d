#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gesbell/bitvec.hpp"
#include "gesbell/gf2.hpp"

namespace ges {

// One N-qubit Pauli word in symplectic form with an i-exponent:
//
//   operator = i^phase_exp * prod_k X_k^{x_k} Z_k^{z_k}
//
// The word is Hermitian iff phase_exp == popcount(x & z) mod 2; products of
// Hermitian words can leave that set, so Hermiticity is a predicate rather
// than an invariant of the type. Values are immutable in spirit: nothing in
// this module mutates a PauliOp after construction.
struct PauliOp {
  std::size_t n = 0;
  BitVec x;
  BitVec z;
  std::uint8_t phase_exp = 0;  // mod 4

  static PauliOp identity(std::size_t n) { return PauliOp{n, BitVec(n), BitVec(n), 0}; }

  bool is_hermitian() const {
    return ((phase_exp + (x & z).popcount()) & 1) == 0;
  }
  // True when every tensor factor is X, Z or the identity.
  bool xz_only() const { return (x & z).none(); }
  bool is_identity_word() const { return x.none() && z.none(); }

  // i-exponent of the sign in the letter form sign * (tensor of 1,X,Y,Z).
  // 0 -> "+", 1 -> "+i", 2 -> "-", 3 -> "-i".
  int letter_sign_exp() const {
    return static_cast<int>((phase_exp + 4 - ((x & z).popcount() & 3)) & 3);
  }

  bool operator==(const PauliOp& o) const {
    return n == o.n && x == o.x && z == o.z && phase_exp == o.phase_exp;
  }
  bool operator!=(const PauliOp& o) const { return !(*this == o); }
};

// Parses a signed Pauli word such as "+XZ1ZX" or "-ZZ". Sign prefixes "+",
// "-", "+i", "-i" are accepted, letters are X, Y, Z and 1; whitespace is
// ignored. Throws format_error on unknown characters or an empty word.
PauliOp pauli_from_string(std::string_view s);

// Inverse of pauli_from_string; always emits an explicit sign prefix.
std::string pauli_to_string(const PauliOp& p);

// Exact group product. Phases accumulate via the standard per-qubit rule
// (moving X factors of b through Z factors of a picks up a sign).
PauliOp multiply(const PauliOp& a, const PauliOp& b);

// Symplectic inner product: zero iff the operators commute.
bool commutes(const PauliOp& a, const PauliOp& b);

// Bit k set iff the single-qubit factors of a and b at position k
// anticommute. Even popcount iff commutes(a, b).
BitVec local_anticommute_mask(const PauliOp& a, const PauliOp& b);

}  // namespace ges
