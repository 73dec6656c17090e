#include "tangle/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tangle::presets {

AsdParams ghz() {
  const double h = std::numbers::sqrt2 / 2.0;
  return AsdParams({h, 0.0, 0.0, 0.0, h}, 0.0);
}

AsdParams w() {
  const double t = std::numbers::inv_sqrt3;
  return AsdParams({t, 0.0, t, t, 0.0}, 0.0);
}

AsdParams g() { return AsdParams({0.5, 0.0, 0.5, 0.5, 0.5}, 0.0); }

AsdParams kappa() {
  return AsdParams({2.0 / 3.0, 0.0, 0.5, 0.5, std::numbers::sqrt2 / 6.0}, 0.0);
}

AsdParams vartheta() {
  const double s = std::sqrt(5.0) / 10.0;
  return AsdParams({3.0 * s, 0.0, s, s, 3.0 * s}, 0.0);
}

AsdParams omega(double lambda4) {
  if (!(lambda4 >= 0.0 && lambda4 <= 1.0))
    throw std::invalid_argument("omega: lambda4 must lie in [0, 1]");
  const double l0 = std::sqrt((1.0 - lambda4 * lambda4) / 3.0);
  return AsdParams({l0, 0.0, l0, l0, lambda4}, 0.0);
}

AsdParams varkappa(double lambda2) {
  if (!(lambda2 >= 0.0 && lambda2 * lambda2 <= 0.5))
    throw std::invalid_argument("varkappa: lambda2 must lie in [0, 1/sqrt 2]");
  const double l0 = std::sqrt(0.5 - lambda2 * lambda2);
  return AsdParams({l0, 0.0, lambda2, lambda2, l0}, 0.0);
}

double w_entropy() { return (3.0 * std::log(3.0) - 2.0 * std::numbers::ln2) / 3.0; }

std::vector<ReferenceRow> reference_rows() {
  const double ln2 = std::numbers::ln2;
  return {
      {"GHZ", ghz(), {0.0, 0.0, 0.0}, {ln2, ln2, ln2}, 1.0},
      {"W", w(), {4.0 / 9.0, 4.0 / 9.0, 4.0 / 9.0}, {0.63651, 0.63651, 0.63651}, 0.0},
      {"G", g(), {0.25, 0.25, 0.25}, {0.56, 0.56, 0.56}, 0.25},
      {"kappa", kappa(), {4.0 / 9.0, 4.0 / 9.0, 0.25}, {0.687, 0.587, 0.587}, 8.0 / 81.0},
      {"vartheta", vartheta(), {0.09, 0.09, 0.01}, {0.688, 0.647, 0.647}, 0.81},
  };
}

}  // namespace tangle::presets
