#pragma once

#include <optional>
#include <string_view>

#include "tangle/closed_form.hpp"
#include "tangle/state.hpp"

namespace tangle {

/// Cutoff for "vanishes" decisions on lambda products, tangles and alphas.
inline constexpr double kZeroTol = 1e-9;

enum class SloccClass { GHZ, W, A_BC, B_AC, C_AB, A_B_C };

/// "GHZ", "W", "A-BC", "B-AC", "C-AB" or "A-B-C".
std::string_view to_string(SloccClass c);

struct Classification {
  SloccClass label = SloccClass::A_B_C;
  /// Some deciding quantity sat in (kZeroTol, 10 kZeroTol).
  bool near_boundary = false;
};

Classification slocc_class_asd(const AsdParams& p);

/// Which vanishing pattern of the GHZ class applies.
enum class VanishingCase {
  NoneVanish,   ///< tau_AB tau_AC tau_BC > 0
  OnlyAB,       ///< lambda3 = 0, lambda1 lambda2 != 0
  OnlyAC,       ///< lambda2 = 0, lambda1 lambda3 != 0
  OnlyBC,       ///< lambda1 lambda4 = lambda2 lambda3 != 0, phi = 0
  AbAndAc,      ///< lambda2 = lambda3 = 0, lambda1 != 0
  AbAndBc,      ///< lambda1 = lambda3 = 0, lambda2 != 0
  AcAndBc,      ///< lambda1 = lambda2 = 0, lambda3 != 0
  AllVanish,    ///< lambda1 = lambda2 = lambda3 = 0
};

std::string_view to_string(VanishingCase c);

struct VanishingProfile {
  bool zero_ab = false;
  bool zero_ac = false;
  bool zero_bc = false;
  VanishingCase matched = VanishingCase::NoneVanish;
  /// The lambda-level characterisation of `matched` holds for the input.
  bool lambda_criterion = false;
};

/// Throws std::invalid_argument unless lambda0 lambda4 > kZeroTol.
VanishingProfile vanishing_profile(const AsdParams& p);

enum class NonvanishingKind { Varpi1, Varpi2, Varpi3, None };

std::string_view to_string(NonvanishingKind k);

struct NonvanishingForm {
  NonvanishingKind form = NonvanishingKind::None;
  std::array<double, 5> lambda{};
  double phi = 0.0;
};

NonvanishingForm nonvanishing_form(const AsdParams& p);

struct Reconstruction {
  AsdParams params;
  /// lambda4 vanished within tolerance; the state lies in the W class.
  bool w_class = false;
};

/// State lambda0|000> + lambda2|101> + lambda3|110> + lambda4|111> with the
/// prescribed pairwise tangles (tau_AB, tau_AC, tau_BC). Throws
/// std::invalid_argument for non-positive tangles and std::domain_error when
/// no such state exists.
Reconstruction reconstruct_from_tangles(double tau_ab, double tau_ac, double tau_bc);

/// J4 as a function of J1, J2, J3 for states with lambda1 = 0.
double j4_from_j123(double j1, double j2, double j3);

/// True iff every single-qubit entropy equals ln 2 within 1e-10. A true
/// result on a state that is not GHZ within 1e-4 throws std::logic_error.
bool ghz_uniqueness_witness(const AsdParams& p);

}  // namespace tangle
