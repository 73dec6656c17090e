#include "tangle/classify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tangle {

namespace {

struct ZeroTest {
  bool near_boundary = false;

  bool zero(double x) {
    x = std::abs(x);
    if (x > kZeroTol && x < 10.0 * kZeroTol) near_boundary = true;
    return x <= kZeroTol;
  }
};

bool phi_is_zero(double phi) {
  return phi <= kZeroTol || 2.0 * std::numbers::pi - phi <= kZeroTol;
}

}  // namespace

std::string_view to_string(SloccClass c) {
  switch (c) {
    case SloccClass::GHZ: return "GHZ";
    case SloccClass::W: return "W";
    case SloccClass::A_BC: return "A-BC";
    case SloccClass::B_AC: return "B-AC";
    case SloccClass::C_AB: return "C-AB";
    case SloccClass::A_B_C: return "A-B-C";
  }
  return "?";
}

std::string_view to_string(VanishingCase c) {
  switch (c) {
    case VanishingCase::NoneVanish: return "none vanish";
    case VanishingCase::OnlyAB: return "only tau_AB vanishes";
    case VanishingCase::OnlyAC: return "only tau_AC vanishes";
    case VanishingCase::OnlyBC: return "only tau_BC vanishes";
    case VanishingCase::AbAndAc: return "tau_AB and tau_AC vanish";
    case VanishingCase::AbAndBc: return "tau_AB and tau_BC vanish";
    case VanishingCase::AcAndBc: return "tau_AC and tau_BC vanish";
    case VanishingCase::AllVanish: return "all pairwise tangles vanish";
  }
  return "?";
}

std::string_view to_string(NonvanishingKind k) {
  switch (k) {
    case NonvanishingKind::Varpi1: return "varpi1";
    case NonvanishingKind::Varpi2: return "varpi2";
    case NonvanishingKind::Varpi3: return "varpi3";
    case NonvanishingKind::None: return "none";
  }
  return "?";
}

Classification slocc_class_asd(const AsdParams& p) {
  const auto& l = p.lambdas();
  ZeroTest t;
  Classification out;
  if (!t.zero(l[0] * l[4])) {
    out.label = SloccClass::GHZ;
  } else if (t.zero(l[4]) && !t.zero(l[0] * l[2] * l[3])) {
    out.label = SloccClass::W;
  } else {
    const Alphas a = alphas(tangles_asd(p));
    const bool pure_a = t.zero(a.a);
    const bool pure_b = t.zero(a.b);
    const bool pure_c = t.zero(a.c);
    if (pure_a && pure_b && pure_c) out.label = SloccClass::A_B_C;
    else if (pure_a) out.label = SloccClass::A_BC;
    else if (pure_b) out.label = SloccClass::B_AC;
    else if (pure_c) out.label = SloccClass::C_AB;
    else
      throw std::logic_error("slocc_class_asd: no single-qubit marginal is pure outside GHZ/W");
  }
  out.near_boundary = t.near_boundary;
  return out;
}

VanishingProfile vanishing_profile(const AsdParams& p) {
  const auto& l = p.lambdas();
  if (!(l[0] * l[4] > kZeroTol))
    throw std::invalid_argument("vanishing_profile: state is not in the GHZ class");

  const TangleSet t = tangles_asd(p);
  VanishingProfile v;
  v.zero_ab = t.ab <= kZeroTol;
  v.zero_ac = t.ac <= kZeroTol;
  v.zero_bc = t.bc <= kZeroTol;

  auto z = [](double x) { return std::abs(x) <= kZeroTol; };
  const int count = int{v.zero_ab} + int{v.zero_ac} + int{v.zero_bc};
  switch (count) {
    case 0:
      v.matched = VanishingCase::NoneVanish;
      v.lambda_criterion =
          (!z(l[2] * l[3]) && z(l[1])) ||
          (!z(l[1] * l[2] * l[3] * (l[1] * l[4] - l[2] * l[3])) && phi_is_zero(p.phi())) ||
          (!z(l[1] * l[2] * l[3]) && !phi_is_zero(p.phi()));
      break;
    case 1:
      if (v.zero_ab) {
        v.matched = VanishingCase::OnlyAB;
        v.lambda_criterion = z(l[3]) && !z(l[1] * l[2]);
      } else if (v.zero_ac) {
        v.matched = VanishingCase::OnlyAC;
        v.lambda_criterion = z(l[2]) && !z(l[1] * l[3]);
      } else {
        v.matched = VanishingCase::OnlyBC;
        v.lambda_criterion =
            z(l[1] * l[4] - l[2] * l[3]) && !z(l[2] * l[3]) && phi_is_zero(p.phi());
      }
      break;
    case 2:
      if (!v.zero_bc) {
        v.matched = VanishingCase::AbAndAc;
        v.lambda_criterion = z(l[2]) && z(l[3]) && !z(l[1]);
      } else if (!v.zero_ac) {
        v.matched = VanishingCase::AbAndBc;
        v.lambda_criterion = z(l[1]) && z(l[3]) && !z(l[2]);
      } else {
        v.matched = VanishingCase::AcAndBc;
        v.lambda_criterion = z(l[1]) && z(l[2]) && !z(l[3]);
      }
      break;
    default:
      v.matched = VanishingCase::AllVanish;
      v.lambda_criterion = z(l[1]) && z(l[2]) && z(l[3]);
      break;
  }
  return v;
}

NonvanishingForm nonvanishing_form(const AsdParams& p) {
  const auto& l = p.lambdas();
  auto nz = [](double x) { return std::abs(x) > kZeroTol; };
  NonvanishingForm f;
  f.lambda = l;
  f.phi = p.phi();
  if (!nz(l[0] * l[4])) return f;
  const bool phi_zero = phi_is_zero(p.phi());
  if (nz(l[2] * l[3]) && !nz(l[1])) f.form = NonvanishingKind::Varpi1;
  else if (nz(l[1] * l[2] * l[3]) && phi_zero && nz(l[1] * l[4] - l[2] * l[3]))
    f.form = NonvanishingKind::Varpi2;
  else if (nz(l[1] * l[2] * l[3]) && !phi_zero) f.form = NonvanishingKind::Varpi3;
  return f;
}

Reconstruction reconstruct_from_tangles(double tau_ab, double tau_ac, double tau_bc) {
  if (!(tau_ab > 0.0 && tau_ac > 0.0 && tau_bc > 0.0))
    throw std::invalid_argument("reconstruct_from_tangles: tangles must be positive");
  // Equality is the W-class boundary and is flagged below, not rejected.
  if (!(tau_ab + tau_ac + tau_bc <= 4.0 / 3.0 + kZeroTol))
    throw std::domain_error("reconstruct_from_tangles: tangle sum exceeds 4/3");

  const double p = std::sqrt(std::sqrt(tau_ab));
  const double q = std::sqrt(std::sqrt(tau_ac));
  const double r = std::sqrt(std::sqrt(tau_bc));
  const double l0 = p * q / (std::numbers::sqrt2 * r);
  const double l2 = q * r / (std::numbers::sqrt2 * p);
  const double l3 = p * r / (std::numbers::sqrt2 * q);
  const double l4_sq = 1.0 - (l0 * l0 + l2 * l2 + l3 * l3);
  if (l4_sq < -kClampTol) {
    std::ostringstream msg;
    msg << "reconstruct_from_tangles: infeasible tangles, lambda4^2 = " << l4_sq << " < 0";
    throw std::domain_error(msg.str());
  }
  const bool w = l4_sq <= kZeroTol;
  const double l4 = w ? 0.0 : std::sqrt(l4_sq);
  return {AsdParams({l0, 0.0, l2, l3, l4}, 0.0), w};
}

double j4_from_j123(double j1, double j2, double j3) {
  if (!(j1 > 0.0)) throw std::invalid_argument("j4_from_j123: j1 must be positive");
  const double ratio = j2 * j3 / j1;
  return std::sqrt(ratio) - (ratio + j2 + j3);
}

bool ghz_uniqueness_witness(const AsdParams& p) {
  const EntropySet e = entropy_set(tangles_asd(p));
  const double ln2 = std::numbers::ln2;
  const bool maximal = e.s_a >= ln2 - 1e-10 && e.s_b >= ln2 - 1e-10 && e.s_c >= ln2 - 1e-10;
  if (!maximal) return false;

  const auto& l = p.lambdas();
  const double h = std::numbers::sqrt2 / 2.0;
  constexpr double tol = 1e-4;
  if (std::abs(l[0] - h) > tol || std::abs(l[4] - h) > tol || l[1] > tol || l[2] > tol ||
      l[3] > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ghz_uniqueness_witness: maximal entropies on a non-GHZ state lambda = (" << l[0]
        << ", " << l[1] << ", " << l[2] << ", " << l[3] << ", " << l[4] << "), phi = " << p.phi();
    throw std::logic_error(msg.str());
  }
  return true;
}

}  // namespace tangle
