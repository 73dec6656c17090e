#include "tangle/oracle.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "tangle/linalg.hpp"
#include "tangle/quartic.hpp"

namespace tangle {

namespace {

using CLD = std::complex<long double>;
using Matrix4L = std::array<CLD, 16>;

constexpr double kImagTol = 1e-8;
constexpr double kNegTol = 1e-9;
constexpr long double kClusterTol = 1e-5L;

// sigma_y x sigma_y is real and anti-diagonal with signs (-1, +1, +1, -1):
// sigma_y = ((0, -i), (i, 0)) and (-i)(-i) = (i)(i) = -1, (-i)(i) = 1.
constexpr std::array<double, 4> kYySign{-1.0, 1.0, 1.0, -1.0};

Matrix4 to_matrix4(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("expected a two-qubit density matrix");
  Matrix4 m;
  std::copy(rho.entries().begin(), rho.entries().end(), m.begin());
  return m;
}

// Y M Y with Y = sigma_y x sigma_y: (Y M Y)_{ij} = s_i s_j M_{3-i, 3-j}.
Matrix4 sandwich_yy(const Matrix4& m) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i * 4 + j] = kYySign[i] * kYySign[j] * m[(3 - i) * 4 + (3 - j)];
  return out;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return out;
}

Matrix4L multiply(const Matrix4L& a, const Matrix4L& b) {
  Matrix4L out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return out;
}

CLD trace(const Matrix4L& a) { return a[0] + a[5] + a[10] + a[15]; }

double det2(const DensityMatrix& rho) {
  return (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
}

double entropy_of(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double eta : spectrum)
    if (eta > 0.0) s -= eta * std::log(eta);
  return s;
}

std::vector<double> spectrum_2x2(const DensityMatrix& rho) {
  const double a = rho(0, 0).real();
  const double d = rho(1, 1).real();
  const double half_gap = std::hypot((a - d) / 2.0, std::abs(rho(0, 1)));
  const double hi = (a + d) / 2.0 + half_gap;
  const double lo = hi > 0.0 ? det2(rho) / hi : 0.0;
  return {hi, std::max(lo, 0.0)};
}

}  // namespace

Matrix4 spin_flip(const Matrix4& rho) {
  Matrix4 conj;
  std::transform(rho.begin(), rho.end(), conj.begin(), [](Complex z) { return std::conj(z); });
  return sandwich_yy(conj);
}

SpinFlippedPair spin_flip(const DensityMatrix& rho) {
  SpinFlippedPair pair;
  pair.rho = to_matrix4(rho);
  pair.rho_bar = spin_flip(pair.rho);
  return pair;
}

std::array<CLD, 4> characteristic_polynomial(const Matrix4& m) {
  Matrix4L a;
  std::transform(m.begin(), m.end(), a.begin(), [](Complex z) { return CLD(z.real(), z.imag()); });

  std::array<CLD, 4> coeff;
  Matrix4L power = a;
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) {
      Matrix4L shifted = power;
      for (int i = 0; i < 4; ++i) shifted[i * 5] += coeff[k - 2];
      power = multiply(a, shifted);
    }
    coeff[k - 1] = -trace(power) / static_cast<long double>(k);
  }
  return coeff;
}

EtaSpectrum eta_spectrum(const SpinFlippedPair& pair) {
  const Matrix4 product = multiply(pair.rho, pair.rho_bar);
  auto coeff = characteristic_polynomial(product);

  // Coefficient k is a degree-k form in the entries; anything inside its
  // round-off floor is an exact zero, which keeps analytically vanishing
  // roots at 0 instead of ~1e-17 (whose square root would be ~3e-9).
  long double frob = 0.0L;
  for (const Complex& z : product) frob += std::norm(CLD(z.real(), z.imag()));
  frob = std::sqrt(frob);
  long double scale = 1.0L;
  for (auto& c : coeff) {
    scale *= frob;
    if (std::abs(c) <= 64.0L * LDBL_EPSILON * scale) c = 0.0L;
  }

  auto roots = solve_monic_quartic(coeff[0], coeff[1], coeff[2], coeff[3]);

  // The entries of rho carry double rounding, which lifts the exact zero
  // eigenvalues of a rank-2 marginal to ~1e-17. Roots at that level are
  // rounding, not spectrum.
  const long double root_floor = 64.0L * DBL_EPSILON * frob;
  for (auto& z : roots)
    if (std::abs(z) <= root_floor) z = 0.0L;

  // A k-fold root comes back as a k-point cluster of radius ~eps^(1/k), often
  // with spurious imaginary parts; the real part of the cluster mean is
  // accurate to ~eps. Only clusters carrying such an imaginary part are merged.
  const long double cluster_radius = kClusterTol * frob;
  std::array<int, 4> group{0, 1, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(roots[i] - roots[j]) <= cluster_radius) {
        const int from = group[j], to = group[i];
        for (int& g : group)
          if (g == from) g = to;
      }
  std::array<CLD, 4> merged = roots;
  for (int i = 0; i < 4; ++i) {
    CLD sum = 0.0L;
    int count = 0;
    bool complex_member = false;
    for (int j = 0; j < 4; ++j)
      if (group[j] == group[i]) {
        sum += roots[j];
        ++count;
        complex_member = complex_member || std::abs(roots[j].imag()) > kImagTol;
      }
    if (complex_member && count > 1) merged[i] = (sum / static_cast<long double>(count)).real();
  }
  roots = merged;

  EtaSpectrum out;
  for (int i = 0; i < 4; ++i) {
    const double re = static_cast<double>(roots[i].real());
    const double im = static_cast<double>(roots[i].imag());
    if (std::abs(im) > kImagTol)
      throw NumericalError("eta_spectrum: eigenvalue has imaginary part " + std::to_string(im));
    if (re < -kNegTol)
      throw NumericalError("eta_spectrum: negative eigenvalue " + std::to_string(re));
    out.eta[i] = std::sqrt(std::max(re, 0.0));
  }
  std::sort(out.eta.begin(), out.eta.end(), std::greater<>());
  return out;
}

EtaSpectrum eta_spectrum(const DensityMatrix& rho) {
  const Matrix4 m = to_matrix4(rho);
  const auto sys = hermitian_eigensystem(m, 4);

  // R = sqrt(rho); R rho~ R is Hermitian with the spectrum of rho rho~.
  Matrix4 root{};
  for (int k = 0; k < 4; ++k) {
    const double w = std::sqrt(std::max(sys.values[k], 0.0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        root[i * 4 + j] += w * sys.vectors[i * 4 + k] * std::conj(sys.vectors[j * 4 + k]);
  }
  const Matrix4 h = multiply(multiply(root, spin_flip(m)), root);
  const auto lambda = hermitian_eigenvalues(h, 4);

  double norm = 0.0;
  for (const Complex& z : h) norm += std::norm(z);
  const double floor = 64.0 * DBL_EPSILON * std::sqrt(norm);

  EtaSpectrum out;
  for (int i = 0; i < 4; ++i) {
    if (lambda[i] < -kNegTol)
      throw NumericalError("eta_spectrum: negative eigenvalue " + std::to_string(lambda[i]));
    out.eta[i] = lambda[i] <= floor ? 0.0 : std::sqrt(lambda[i]);
  }
  return out;
}

EtaSpectrum eta_spectrum(const Amplitudes& s, int traced) {
  if (traced < qubit::A || traced > qubit::C)
    throw std::invalid_argument("eta_spectrum: traced qubit out of range");

  // Row r of M enumerates the kept pair in order, column z the traced bit.
  const int traced_bit = 2 - traced;
  std::array<std::array<Complex, 2>, 4> m;
  for (unsigned idx = 0; idx < 8; ++idx) {
    const unsigned z = (idx >> traced_bit) & 1u;
    const unsigned high = idx >> (traced_bit + 1);
    const unsigned low = idx & ((1u << traced_bit) - 1u);
    const unsigned row = (high << traced_bit) | low;
    m[row][z] = s[idx];
  }

  std::array<Complex, 4> t{};  // 2x2, row-major
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int r = 0; r < 4; ++r) t[a * 2 + b] += m[r][a] * kYySign[r] * m[3 - r][b];

  const double frob_sq = std::norm(t[0]) + std::norm(t[1]) + std::norm(t[2]) + std::norm(t[3]);
  const double det = std::abs(t[0] * t[3] - t[1] * t[2]);
  const double disc = std::sqrt(std::max((frob_sq - 2.0 * det) * (frob_sq + 2.0 * det), 0.0));
  EtaSpectrum out;
  out.eta[0] = std::sqrt((frob_sq + disc) / 2.0);
  out.eta[1] = out.eta[0] > 0.0 ? det / out.eta[0] : 0.0;
  return out;
}

double tangle_oracle(const DensityMatrix& rho) {
  const auto e = eta_spectrum(rho).eta;
  const double diff = std::max(e[0] - e[1] - e[2] - e[3], 0.0);
  return diff * diff;
}

double entropy_oracle(const DensityMatrix& rho) {
  if (rho.dim() == 2) return entropy_of(spectrum_2x2(rho));
  if (rho.dim() == 4) return entropy_of(hermitian_eigenvalues(rho.entries(), 4));
  throw std::invalid_argument("entropy_oracle: expected a 1- or 2-qubit density matrix");
}

double williamson_check(const DensityMatrix& rho, double tau_pair, double tau_abc) {
  const Matrix4 m = to_matrix4(rho);
  Matrix4 transposed;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) transposed[i * 4 + j] = m[j * 4 + i];
  const Matrix4 tilde = sandwich_yy(transposed);
  Complex tr = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) tr += m[i * 4 + k] * tilde[k * 4 + i];
  return tr.real() - (tau_pair + tau_abc / 2.0);
}

MeasureReport measures_oracle(const Amplitudes& s) {
  const DensityMatrix rho = density_matrix(s);
  const DensityMatrix rho_a = partial_trace(rho, {qubit::A});
  const DensityMatrix rho_b = partial_trace(rho, {qubit::B});
  const DensityMatrix rho_c = partial_trace(rho, {qubit::C});

  MeasureReport r;
  TangleSet& t = r.tangles;
  auto pure_tangle = [&s](int traced) {
    const auto e = eta_spectrum(s, traced).eta;
    const double diff = std::max(e[0] - e[1], 0.0);
    return diff * diff;
  };
  t.ab = pure_tangle(qubit::C);
  t.ac = pure_tangle(qubit::B);
  t.bc = pure_tangle(qubit::A);
  t.a_bc = 4.0 * det2(rho_a);
  t.b_ac = 4.0 * det2(rho_b);
  t.c_ab = 4.0 * det2(rho_c);
  t.abc = std::max(t.a_bc - t.ab - t.ac, 0.0);

  EntropySet& e = r.entropies;
  e.alpha = {det2(rho_a), det2(rho_b), det2(rho_c)};
  const auto sa = spectrum_2x2(rho_a);
  const auto sb = spectrum_2x2(rho_b);
  const auto sc = spectrum_2x2(rho_c);
  e.eta_a = {sa[0], sa[1]};
  e.eta_b = {sb[0], sb[1]};
  e.eta_c = {sc[0], sc[1]};
  e.s_a = entropy_oracle(rho_a);
  e.s_b = entropy_oracle(rho_b);
  e.s_c = entropy_oracle(rho_c);

  r.concurrences = {std::sqrt(t.ab), std::sqrt(t.ac), std::sqrt(t.bc)};
  r.avg_tangle = (t.ab + t.ac + t.bc) / 3.0;
  r.avg_entropy = (e.s_a + e.s_b + e.s_c) / 3.0;
  r.relation_residual = r.avg_entropy - r.avg_tangle - t.abc / 2.0 - (std::numbers::ln2 - 0.5);
  return r;
}

}  // namespace tangle
