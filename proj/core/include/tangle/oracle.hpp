#pragma once

#include <array>
#include <stdexcept>

#include "tangle/closed_form.hpp"
#include "tangle/state.hpp"

namespace tangle {

/// Row-major 4x4 complex matrix.
using Matrix4 = std::array<Complex, 16>;

/// Raised when the rho * rho_bar spectrum is not real and non-negative
/// within the accepted round-off.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpinFlippedPair {
  Matrix4 rho{};
  Matrix4 rho_bar{};
};

/// Square roots of the eigenvalues of rho * rho_bar, eta[0] >= ... >= eta[3].
struct EtaSpectrum {
  std::array<double, 4> eta{};
};

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
SpinFlippedPair spin_flip(const DensityMatrix& rho);
Matrix4 spin_flip(const Matrix4& rho);

/// Monic characteristic polynomial x^4 + a[0] x^3 + a[1] x^2 + a[2] x + a[3]
/// by the Faddeev-LeVerrier trace recursion, in extended precision.
std::array<std::complex<long double>, 4> characteristic_polynomial(const Matrix4& m);

/// Throws NumericalError on an eigenvalue with |imag| > 1e-8 or real part
/// below -1e-9.
EtaSpectrum eta_spectrum(const SpinFlippedPair& pair);

/// Same spectrum for a physical two-qubit state, from the Hermitian matrix
/// sqrt(rho) rho_bar sqrt(rho). Eigenvalues below 64 eps of its norm are 0.
EtaSpectrum eta_spectrum(const DensityMatrix& rho);

/// Spectrum of rho * rho_bar for the marginal of a pure state on the two
/// qubits other than `traced`. With rho = M M^dagger (M is 4x2), the
/// non-zero eta are the singular values of M^T (sigma_y x sigma_y) M.
EtaSpectrum eta_spectrum(const Amplitudes& s, int traced);

/// [max(eta1 - eta2 - eta3 - eta4, 0)]^2 for a two-qubit density matrix.
double tangle_oracle(const DensityMatrix& rho);

/// -sum eta ln eta over the spectrum of a 1- or 2-qubit density matrix.
double entropy_oracle(const DensityMatrix& rho);

/// tr[rho rho~] - (tau_pair + tau_abc / 2), where rho~ flips the transpose.
double williamson_check(const DensityMatrix& rho, double tau_pair, double tau_abc);

/// Every measure from the spin-flip spectra and marginal density matrices;
/// shares no code with the closed-form polynomials.
MeasureReport measures_oracle(const Amplitudes& s);

}  // namespace tangle
