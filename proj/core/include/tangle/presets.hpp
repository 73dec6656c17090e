#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "tangle/state.hpp"

namespace tangle::presets {

/// (|000> + |111>) / sqrt 2
AsdParams ghz();
/// (|000> + |101> + |110>) / sqrt 3
AsdParams w();
/// (|000> + |101> + |110> + |111>) / 2
AsdParams g();
/// (2/3)|000> + (1/2)|101> + (1/2)|110> + (sqrt 2 / 6)|111>
AsdParams kappa();
/// (sqrt 5 / 10)(3|000> + |101> + |110> + 3|111>)
AsdParams vartheta();
/// l0 (|000> + |101> + |110>) + l4 |111>, 3 l0^2 + l4^2 = 1.
AsdParams omega(double lambda4);
/// l0 (|000> + |111>) + l2 (|101> + |110>), 2 l0^2 + 2 l2^2 = 1.
AsdParams varkappa(double lambda2);

/// A tabulated state with its published measures.
struct ReferenceRow {
  std::string_view name;
  AsdParams state;
  std::array<double, 3> tangles;    ///< tau_AB, tau_AC, tau_BC (exact rationals)
  std::array<double, 3> entropies;  ///< S_A, S_B, S_C as printed
  double three_tangle;
};

/// GHZ, W, G, kappa, vartheta.
std::vector<ReferenceRow> reference_rows();

/// (3 ln 3 - 2 ln 2) / 3, the single-qubit entropy of the W state.
double w_entropy();

}  // namespace tangle::presets
