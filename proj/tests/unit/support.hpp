#pragma once

#include <cmath>
#include <numbers>

#include "tangle/state.hpp"

namespace tangle::test {

inline constexpr double kLn2 = std::numbers::ln2;

inline Amplitudes product_state() { return Amplitudes::basis(0); }

/// |psi> with c_i = values[i], normalised.
inline Amplitudes from_reals(std::initializer_list<double> values) {
  Amplitudes::Storage raw{};
  std::size_t i = 0;
  for (double v : values) raw[i++] = v;
  return normalize(raw);
}

/// Bell pair on A and B, qubit C in |0>.
inline Amplitudes bell_ab() { return from_reals({1, 0, 0, 0, 0, 0, 1, 0}); }

}  // namespace tangle::test
