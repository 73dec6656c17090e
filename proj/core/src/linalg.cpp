#include "tangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tangle {

namespace {

double off_diagonal_norm(const std::vector<std::complex<double>>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += std::norm(a[i * n + j]);
  return std::sqrt(sum);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(std::span<const std::complex<double>> in,
                                           std::size_t n) {
  if (in.size() != n * n) throw std::invalid_argument("hermitian_eigensystem: size mismatch");

  // Symmetrise from the upper triangle so that round-off below the diagonal
  // cannot leak into the rotations.
  std::vector<std::complex<double>> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = in[i * n + i].real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i * n + j] = in[i * n + j];
      a[j * n + i] = std::conj(in[i * n + j]);
    }
  }

  std::vector<std::complex<double>> v(n * n);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= kJacobiTol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a[p * n + q];
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;

        // Rotate the 2x2 block [[app, apq], [conj(apq), aqq]] to diagonal form.
        // With apq = mag * e^{i w}, the unitary
        //   J = [[c, -s e^{i w}], [s e^{-i w}, c]]
        // zeroes the (p, q) entry when t = s / c solves t^2 - 2 theta t - 1 = 0.
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const std::complex<double> phase = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? -1.0 : 1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- A J on columns p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> akp = a[k * n + p];
          const std::complex<double> akq = a[k * n + q];
          a[k * n + p] = c * akp + s * std::conj(phase) * akq;
          a[k * n + q] = -s * phase * akp + c * akq;
        }
        // A <- J^dagger A on rows p, q.
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> apk = a[p * n + k];
          const std::complex<double> aqk = a[q * n + k];
          a[p * n + k] = c * apk + s * phase * aqk;
          a[q * n + k] = -s * std::conj(phase) * apk + c * aqk;
        }
        // V <- V J.
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> vkp = v[k * n + p];
          const std::complex<double> vkq = v[k * n + q];
          v[k * n + p] = c * vkp + s * std::conj(phase) * vkq;
          v[k * n + q] = -s * phase * vkp + c * vkq;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&a, n](std::size_t x, std::size_t y) { return a[x * n + x].real() > a[y * n + y].real(); });

  HermitianEigensystem out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values[col] = a[order[col] * n + order[col]].real();
    for (std::size_t k = 0; k < n; ++k) out.vectors[k * n + col] = v[k * n + order[col]];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> a, std::size_t n) {
  return hermitian_eigensystem(a, n).values;
}

double hermiticity_defect(std::span<const std::complex<double>> a, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      worst = std::max(worst, std::abs(a[i * n + j] - std::conj(a[j * n + i])));
  return worst;
}

}  // namespace tangle
