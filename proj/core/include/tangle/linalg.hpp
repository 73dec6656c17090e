#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tangle {

/// Off-diagonal Frobenius norm at which the Jacobi sweep stops.
inline constexpr double kJacobiTol = 1e-14;

/// Eigenvalues of a Hermitian n x n matrix (row-major), sorted descending.
/// Cyclic complex Jacobi rotations; only the upper triangle is trusted.
std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> a,
                                          std::size_t n);

struct HermitianEigensystem {
  std::vector<double> values;                ///< descending
  std::vector<std::complex<double>> vectors;  ///< row-major; column k pairs with values[k]
};

HermitianEigensystem hermitian_eigensystem(std::span<const std::complex<double>> a,
                                           std::size_t n);

/// max_{ij} |a_ij - conj(a_ji)|.
double hermiticity_defect(std::span<const std::complex<double>> a, std::size_t n);

}  // namespace tangle
