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

#include <array>
#include <cmath>
#include <vector>

#include "kicksim/pauli.hpp"

namespace kicksim {

/// 2^(N_S+N_A) complex amplitudes over the system-then-ancilla register.
struct StateVector {
  QubitRegister reg;
  std::vector<complex_t> amps;

  StateVector() = default;
  explicit StateVector(const QubitRegister& r) : reg(r), amps(r.dim(), complex_t{0, 0}) {}

  std::uint64_t dim() const { return amps.size(); }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  complex_t inner(const StateVector& other) const {
    complex_t s{0, 0};
    for (std::uint64_t b = 0; b < dim(); ++b) s += std::conj(amps[b]) * other.amps[b];
    return s;
  }

  /// |<this|other>|^2 -- both assumed normalized.
  double fidelity(const StateVector& other) const { return std::norm(inner(other)); }

  static StateVector basis_state(const QubitRegister& reg, std::uint64_t index) {
    StateVector s(reg);
    s.amps[index] = complex_t{1, 0};
    return s;
  }

  /// Product state from one 2-amplitude spinor per qubit (qubit 0 first).
  static StateVector product_state(const QubitRegister& reg,
                                   const std::vector<std::array<complex_t, 2>>& spinors) {
    if (static_cast<int>(spinors.size()) != reg.n_total())
      throw config_error("product_state: spinor count does not match register");
    StateVector s(reg);
    for (std::uint64_t b = 0; b < s.dim(); ++b) {
      complex_t a{1, 0};
      for (int q = 0; q < reg.n_total(); ++q) a *= spinors[q][(b >> q) & 1];
      s.amps[b] = a;
    }
    return s;
  }
};

inline constexpr std::array<complex_t, 2> spin_z0() { return {complex_t{1, 0}, complex_t{0, 0}}; }
inline constexpr std::array<complex_t, 2> spin_z1() { return {complex_t{0, 0}, complex_t{1, 0}}; }
/// |0_x> = (|0>+|1>)/sqrt(2) and |1_x> = (|0>-|1>)/sqrt(2)
inline std::array<complex_t, 2> spin_x0() {
  const double r = 1.0 / std::sqrt(2.0);
  return {complex_t{r, 0}, complex_t{r, 0}};
}
inline std::array<complex_t, 2> spin_x1() {
  const double r = 1.0 / std::sqrt(2.0);
  return {complex_t{r, 0}, complex_t{-r, 0}};
}

}  // namespace kicksim
