#pragma once

#include <array>
#include <optional>

#include "tangle/state.hpp"

namespace tangle {

/// Round-off window: values in [-kClampTol, 0) become 0, alphas in
/// (1/4, 1/4 + kClampTol] become 1/4.
inline constexpr double kClampTol = 1e-12;

/// Pairwise tangles, 3-tangle and one-tangles of a pure three-qubit state.
struct TangleSet {
  double ab = 0.0;
  double ac = 0.0;
  double bc = 0.0;
  double abc = 0.0;
  double a_bc = 0.0;  ///< tau_A(BC)
  double b_ac = 0.0;  ///< tau_B(AC)
  double c_ab = 0.0;  ///< tau_C(AB)
};

/// Local-unitary invariants J1..J4 of an ASD state.
struct InvariantSet {
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double j4 = 0.0;
};

/// Eigenvalues of a single-qubit marginal, major >= minor.
struct EtaPair {
  double major = 1.0;
  double minor = 0.0;
};

/// Determinants of the three single-qubit marginals.
struct Alphas {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Single-qubit entropies (nats) with their spectra. Two-qubit marginal
/// entropies coincide with the complementary single-qubit ones.
struct EntropySet {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_c = 0.0;
  Alphas alpha;
  EtaPair eta_a;
  EtaPair eta_b;
  EtaPair eta_c;

  double s_bc() const { return s_a; }
  double s_ac() const { return s_b; }
  double s_ab() const { return s_c; }
};

struct MeasureReport {
  TangleSet tangles;
  std::optional<InvariantSet> invariants;  ///< ASD input only
  EntropySet entropies;
  std::array<double, 3> concurrences{};  ///< AB, AC, BC
  double avg_tangle = 0.0;
  double avg_entropy = 0.0;
  double relation_residual = 0.0;
};

// Degree-4 polynomials of the amplitudes -------------------------------------

/// |hyperdeterminant| form; 4 * theta(s) equals the 3-tangle.
double theta(const Amplitudes& s);
double three_tangle(const Amplitudes& s);
/// Sums of the non-zero eigenvalues of rho_XY * spin_flip(rho_XY).
double delta(const Amplitudes& s);      // AB
double phi_poly(const Amplitudes& s);   // AC
double psi_poly(const Amplitudes& s);   // BC

TangleSet tangles_closed_form(const Amplitudes& s);

// ASD shortcuts --------------------------------------------------------------

TangleSet tangles_asd(const AsdParams& p);
InvariantSet invariants_asd(const AsdParams& p);

// Entropy --------------------------------------------------------------------

/// alpha_X = tau_X(YZ) / 4. Throws std::domain_error when an alpha exceeds
/// 1/4 by more than 1e-9 (the tangles are then inconsistent).
Alphas alphas(const TangleSet& t);

/// Roots of X^2 - X + alpha.
EtaPair marginal_eigenvalues(double alpha);

/// S = -(eta1 ln eta1 + eta2 ln eta2), alpha in [0, 1/4].
double entropy_from_alpha(double alpha);

/// dS/dalpha on the open interval (0, 1/4).
double entropy_derivative(double alpha);

/// Second-order expansion ln 2 - 1/2 + 2 alpha.
double entropy_taylor(double alpha);

EntropySet entropy_set(const TangleSet& t);
EntropySet entropy_set(const Amplitudes& s);

// Averages -------------------------------------------------------------------

double average_tangle(const TangleSet& t);
double average_entropy(const EntropySet& e);

/// m - A - tau_ABC / 2 - (ln 2 - 1/2). Always in [-(ln 2 - 1/2), 0].
double relation_residual(const TangleSet& t, const EntropySet& e);
double relation_residual(const Amplitudes& s);

// Aggregate ------------------------------------------------------------------

MeasureReport measure_report(const Amplitudes& s);

/// Computes the ASD fast path and the general path; throws std::logic_error
/// if they disagree by more than 1e-10.
MeasureReport measure_report(const AsdParams& p);

/// Assembles a report from already-computed tangles.
MeasureReport assemble_report(const TangleSet& t, std::optional<InvariantSet> j = std::nullopt);

}  // namespace tangle
