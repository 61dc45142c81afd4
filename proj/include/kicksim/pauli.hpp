// Copyright 2026 The kicksim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "kicksim/errors.hpp"

namespace kicksim {

using complex_t = std::complex<double>;

/// Single-qubit axis. XY denotes the Hermitian unit axis (X+Y)/sqrt(2),
/// kept as a first-class label so its rotations stay closed-form.
enum class Pauli : std::uint8_t { X, Y, Z, XY };

inline const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
    case Pauli::XY: return "XY";
  }
  return "?";
}

inline Pauli pauli_from_string(const std::string& s) {
  if (s == "X") return Pauli::X;
  if (s == "Y") return Pauli::Y;
  if (s == "Z") return Pauli::Z;
  if (s == "XY" || s == "S") return Pauli::XY;
  throw config_error("unknown Pauli label '" + s + "'");
}

/// Register layout: qubits 0..n_system-1 are system, the rest are ancilla.
/// Basis index is little-endian (qubit 0 = least-significant bit), and
/// Z|0> = +|0> globally.
struct QubitRegister {
  int n_system = 0;
  int n_ancilla = 0;

  QubitRegister() = default;
  QubitRegister(int n_sys, int n_anc) : n_system(n_sys), n_ancilla(n_anc) {
    if (n_system < 1) throw config_error("register needs at least one system qubit");
    if (n_ancilla < 0) throw config_error("negative ancilla count");
    if (n_system + n_ancilla > 24)
      throw config_error("register cap is 24 qubits total, got " +
                         std::to_string(n_system + n_ancilla));
  }

  int n_total() const { return n_system + n_ancilla; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_total(); }
  std::uint64_t system_dim() const { return std::uint64_t{1} << n_system; }
  std::uint64_t ancilla_dim() const { return std::uint64_t{1} << n_ancilla; }

  bool operator==(const QubitRegister&) const = default;
};

/// coeff * tensor product of single-qubit axes. Empty factors = scaled identity.
struct PauliString {
  double coeff = 1.0;
  std::map<int, Pauli> factors;

  PauliString() = default;
  PauliString(double c, std::map<int, Pauli> f) : coeff(c), factors(std::move(f)) {}

  std::string to_string() const {
    std::string out = std::to_string(coeff);
    if (factors.empty()) out += " I";
    for (const auto& [q, p] : factors)
      out += std::string(" ") + kicksim::to_string(p) + std::to_string(q);
    return out;
  }
};

/// Bit-mask form of a PauliString used by the amplitude kernels.
///
/// Action on a basis state:  P |b>  =  phase(b) * coeff * |b ^ flip_mask>
/// with phase(b) = base_phase * (-1)^popcount(b & neg_mask)
///                            * (-i)^popcount(b & xy_mask).
struct CompiledString {
  std::uint64_t flip_mask = 0;  // X, Y and XY factors flip their bit
  std::uint64_t neg_mask = 0;   // Y and Z factors negate on bit = 1
  std::uint64_t xy_mask = 0;    // XY factors contribute e^{-i pi/2 b}
  complex_t base_phase{1.0, 0.0};
  double coeff = 1.0;

  bool is_diagonal() const { return flip_mask == 0; }

  complex_t phase_of(std::uint64_t b) const {
    complex_t p = base_phase;
    if (std::popcount(b & neg_mask) & 1) p = -p;
    switch (std::popcount(b & xy_mask) & 3) {
      case 1: p = complex_t(p.imag(), -p.real()); break;   // * -i
      case 2: p = -p; break;
      case 3: p = complex_t(-p.imag(), p.real()); break;   // * +i
      default: break;
    }
    return p;
  }
};

inline CompiledString compile(const PauliString& s, const QubitRegister& reg) {
  CompiledString cs;
  cs.coeff = s.coeff;
  int n_y = 0, n_xy = 0;
  for (const auto& [q, p] : s.factors) {
    if (q < 0 || q >= reg.n_total())
      throw config_error("Pauli factor on qubit " + std::to_string(q) +
                         " outside register of " + std::to_string(reg.n_total()));
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (p) {
      case Pauli::X:
        cs.flip_mask |= bit;
        break;
      case Pauli::Y:
        cs.flip_mask |= bit;
        cs.neg_mask |= bit;
        ++n_y;
        break;
      case Pauli::Z:
        cs.neg_mask |= bit;
        break;
      case Pauli::XY:
        cs.flip_mask |= bit;
        cs.xy_mask |= bit;
        ++n_xy;
        break;
    }
  }
  // base phase: i^n_y * e^{i pi/4 n_xy}
  constexpr complex_t i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cs.base_phase = i_pow[n_y & 3];
  const double a = std::numbers::pi / 4.0 * static_cast<double>(n_xy & 7);
  cs.base_phase *= complex_t(std::cos(a), std::sin(a));
  return cs;
}

inline std::vector<CompiledString> compile(const std::vector<PauliString>& terms,
                                           const QubitRegister& reg) {
  std::vector<CompiledString> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(compile(t, reg));
  return out;
}

/// True when the two strings provably commute as operators.
/// Per shared qubit the labels either commute (equal or identity), cleanly
/// anticommute, or do neither (XY against X or Y); the last case is treated
/// as non-commuting.
inline bool strings_commute(const PauliString& a, const PauliString& b) {
  int anti = 0;
  for (const auto& [q, pa] : a.factors) {
    auto it = b.factors.find(q);
    if (it == b.factors.end()) continue;
    const Pauli pb = it->second;
    if (pa == pb) continue;
    const bool a_xy = pa == Pauli::XY, b_xy = pb == Pauli::XY;
    if (a_xy || b_xy) {
      // XY anticommutes with Z, has no definite relation with X or Y
      if ((a_xy && pb == Pauli::Z) || (b_xy && pa == Pauli::Z)) { ++anti; continue; }
      return false;
    }
    ++anti;  // distinct members of {X,Y,Z} anticommute
  }
  return (anti & 1) == 0;
}

}  // namespace kicksim
