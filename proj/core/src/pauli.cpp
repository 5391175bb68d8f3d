#include "gesbell/pauli.hpp"

#include <cctype>

namespace ges {

PauliOp pauli_from_string(std::string_view s) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_space();

  int sign_exp = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign_exp = s[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      sign_exp += 1;
      ++pos;
    }
  }

  std::vector<char> letters;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'X' || c == 'Y' || c == 'Z' || c == '1') {
      letters.push_back(c);
    } else {
      throw format_error(std::string("unknown character '") + c + "' in Pauli word");
    }
  }
  if (letters.empty()) throw format_error("empty Pauli word");

  PauliOp p;
  p.n = letters.size();
  p.x = BitVec(p.n);
  p.z = BitVec(p.n);
  int n_y = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    switch (letters[k]) {
      case 'X':
        p.x.set(k);
        break;
      case 'Z':
        p.z.set(k);
        break;
      case 'Y':
        p.x.set(k);
        p.z.set(k);
        ++n_y;  // Y = i * XZ
        break;
      default:
        break;
    }
  }
  p.phase_exp = static_cast<std::uint8_t>((sign_exp + n_y) & 3);
  return p;
}

std::string pauli_to_string(const PauliOp& p) {
  static const char* kSigns[] = {"+", "+i", "-", "-i"};
  std::string out = kSigns[p.letter_sign_exp()];
  out.reserve(out.size() + p.n);
  for (std::size_t k = 0; k < p.n; ++k) {
    bool xk = p.x.get(k), zk = p.z.get(k);
    out += xk ? (zk ? 'Y' : 'X') : (zk ? 'Z' : '1');
  }
  return out;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) throw validation_error("multiply: Pauli word size mismatch");
  PauliOp r;
  r.n = a.n;
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  // X^{x_b} moves left through Z^{z_a}: one factor of -1 per overlapping qubit.
  int swaps = static_cast<int>((a.z & b.x).popcount());
  r.phase_exp = static_cast<std::uint8_t>((a.phase_exp + b.phase_exp + 2 * swaps) & 3);
  return r;
}

bool commutes(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) throw validation_error("commutes: Pauli word size mismatch");
  return a.x.and_parity(b.z) == a.z.and_parity(b.x);
}

BitVec local_anticommute_mask(const PauliOp& a, const PauliOp& b) {
  if (a.n != b.n) throw validation_error("local_anticommute_mask: size mismatch");
  return (a.x & b.z) ^ (a.z & b.x);
}

}  // namespace ges
