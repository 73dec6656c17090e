#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace tangle {

using Complex = std::complex<double>;

/// Random source used by every sampler in the library.
using Rng = std::mt19937_64;

/// Tolerance on Σ|c_i|² when a state is accepted.
inline constexpr double kNormTol = 1e-9;

/// Tolerance for Hermiticity, trace, positivity and unitarity checks.
inline constexpr double kMatTol = 1e-10;

/// Qubit positions inside a basis index. Position 0 is the most significant
/// bit, so for three qubits the basis label is |abc> = 4a + 2b + c.
namespace qubit {
inline constexpr int A = 0;
inline constexpr int B = 1;
inline constexpr int C = 2;
}  // namespace qubit

/// Pure three-qubit state |psi> = sum_i c_i |i>, normalised within kNormTol.
class Amplitudes {
 public:
  static constexpr std::size_t kSize = 8;
  using Storage = std::array<Complex, kSize>;

  /// Throws std::invalid_argument if the vector is not normalised.
  explicit Amplitudes(const Storage& c);

  /// Computational basis state |index>.
  static Amplitudes basis(unsigned index);

  const Complex& operator[](std::size_t i) const { return c_[i]; }
  const Storage& coefficients() const { return c_; }
  double norm_squared() const;

 private:
  Storage c_;
};

/// Rescales an arbitrary non-zero vector to unit norm. Callers opt into this
/// explicitly; Amplitudes never renormalises silently.
Amplitudes normalize(const Amplitudes::Storage& raw);

/// Five-amplitude, one-phase canonical form
///   l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
class AsdParams {
 public:
  /// Requires l_i >= 0 and sum l_i^2 = 1 within kNormTol. phi is reduced
  /// modulo 2*pi into [0, 2*pi).
  AsdParams(const std::array<double, 5>& lambda, double phi);

  double lambda(std::size_t i) const { return lambda_[i]; }
  const std::array<double, 5>& lambdas() const { return lambda_; }
  double phi() const { return phi_; }

 private:
  std::array<double, 5> lambda_;
  double phi_;
};

Amplitudes asd_to_amplitudes(const AsdParams& p);

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// u_a (x) u_b (x) u_c with every factor unitary within kMatTol.
class LocalUnitary {
 public:
  LocalUnitary(const Mat2& u_a, const Mat2& u_b, const Mat2& u_c);

  static LocalUnitary identity();

  const Mat2& a() const { return u_[0]; }
  const Mat2& b() const { return u_[1]; }
  const Mat2& c() const { return u_[2]; }
  const Mat2& factor(std::size_t q) const { return u_[q]; }

 private:
  std::array<Mat2, 3> u_;
};

/// ||U^dagger U - I||_max for a 2x2 matrix.
double unitarity_defect(const Mat2& u);

Amplitudes apply_local_unitary(const Amplitudes& s, const LocalUnitary& u);

/// Density operator of 1, 2 or 3 qubits, stored row-major.
class DensityMatrix {
 public:
  /// Validates dimension, Hermiticity, unit trace and positivity (all within
  /// kMatTol). Throws std::invalid_argument on violation.
  static DensityMatrix checked(std::size_t dim, std::vector<Complex> entries);

  std::size_t dim() const { return dim_; }
  int qubits() const;
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }
  Complex trace() const;

 private:
  DensityMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  friend DensityMatrix density_matrix(const Amplitudes& s);
  friend DensityMatrix partial_trace(const DensityMatrix& rho,
                                     std::span<const int> keep);

  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// |psi><psi|, an 8x8 rank-one projector.
DensityMatrix density_matrix(const Amplitudes& s);

/// Reduced operator on the qubits at positions `keep` (strictly increasing,
/// non-empty, not all qubits). Kept qubits retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Haar-random pure state: normalised vector of i.i.d. complex Gaussians.
Amplitudes random_state(Rng& rng);

/// |N(0,1)| magnitudes rescaled to unit norm, phi uniform on [0, 2*pi).
AsdParams random_asd(Rng& rng);

/// Three independent Haar-random 2x2 unitaries.
LocalUnitary random_local_unitary(Rng& rng);

}  // namespace tangle
