#include "tangle/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tangle/linalg.hpp"

namespace tangle {

namespace {

double sum_norm(const Amplitudes::Storage& c) {
  double total = 0.0;
  for (const auto& z : c) total += std::norm(z);
  return total;
}

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Mat2 haar_unitary(Rng& rng) {
  // Gram-Schmidt on a Ginibre matrix; the QR phases are absorbed by
  // normalising each column directly, which keeps the result Haar.
  std::array<Complex, 2> col0{gaussian_complex(rng), gaussian_complex(rng)};
  std::array<Complex, 2> col1{gaussian_complex(rng), gaussian_complex(rng)};

  const double n0 = std::sqrt(std::norm(col0[0]) + std::norm(col0[1]));
  col0[0] /= n0;
  col0[1] /= n0;
  const Complex overlap = std::conj(col0[0]) * col1[0] + std::conj(col0[1]) * col1[1];
  col1[0] -= overlap * col0[0];
  col1[1] -= overlap * col0[1];
  const double n1 = std::sqrt(std::norm(col1[0]) + std::norm(col1[1]));
  col1[0] /= n1;
  col1[1] /= n1;

  return {col0[0], col1[0], col0[1], col1[1]};
}

}  // namespace

// ---------------------------------------------------------------------------
// Amplitudes

Amplitudes::Amplitudes(const Storage& c) : c_(c) {
  for (const auto& z : c_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("amplitudes: non-finite coefficient");
  const double n = sum_norm(c_);
  if (std::abs(n - 1.0) > kNormTol)
    throw std::invalid_argument("amplitudes: sum |c_i|^2 = " + std::to_string(n) +
                                " is not 1 within tolerance");
}

Amplitudes Amplitudes::basis(unsigned index) {
  if (index >= kSize) throw std::out_of_range("amplitudes: basis index out of range");
  Storage c{};
  c[index] = 1.0;
  return Amplitudes(c);
}

double Amplitudes::norm_squared() const { return sum_norm(c_); }

Amplitudes normalize(const Amplitudes::Storage& raw) {
  const double n = sum_norm(raw);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::invalid_argument("normalize: vector has zero or non-finite norm");
  const double scale = 1.0 / std::sqrt(n);
  Amplitudes::Storage out;
  std::transform(raw.begin(), raw.end(), out.begin(), [scale](Complex z) { return z * scale; });
  return Amplitudes(out);
}

// ---------------------------------------------------------------------------
// AsdParams

AsdParams::AsdParams(const std::array<double, 5>& lambda, double phi) : lambda_(lambda) {
  double total = 0.0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (!std::isfinite(lambda_[i]) || lambda_[i] < 0.0)
      throw std::invalid_argument("asd: lambda" + std::to_string(i) + " must be finite and >= 0");
    total += lambda_[i] * lambda_[i];
  }
  if (std::abs(total - 1.0) > kNormTol)
    throw std::invalid_argument("asd: sum lambda_i^2 = " + std::to_string(total) +
                                " is not 1 within tolerance");
  if (!std::isfinite(phi)) throw std::invalid_argument("asd: phi must be finite");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  phi_ = std::fmod(phi, two_pi);
  if (phi_ < 0.0) phi_ += two_pi;
  if (phi_ >= two_pi) phi_ = 0.0;
}

Amplitudes asd_to_amplitudes(const AsdParams& p) {
  Amplitudes::Storage c{};
  c[0] = p.lambda(0);
  c[4] = std::polar(p.lambda(1), p.phi());
  c[5] = p.lambda(2);
  c[6] = p.lambda(3);
  c[7] = p.lambda(4);
  return Amplitudes(c);
}

// ---------------------------------------------------------------------------
// LocalUnitary

double unitarity_defect(const Mat2& u) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex sum = std::conj(u[0 * 2 + i]) * u[0 * 2 + j] + std::conj(u[1 * 2 + i]) * u[1 * 2 + j];
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

LocalUnitary::LocalUnitary(const Mat2& u_a, const Mat2& u_b, const Mat2& u_c)
    : u_{u_a, u_b, u_c} {
  static constexpr const char* kNames[] = {"u_a", "u_b", "u_c"};
  for (std::size_t q = 0; q < 3; ++q)
    if (!(unitarity_defect(u_[q]) <= kMatTol))
      throw std::invalid_argument(std::string("local unitary: ") + kNames[q] + " is not unitary");
}

LocalUnitary LocalUnitary::identity() {
  const Mat2 id{1.0, 0.0, 0.0, 1.0};
  return {id, id, id};
}

Amplitudes apply_local_unitary(const Amplitudes& s, const LocalUnitary& u) {
  Amplitudes::Storage cur = s.coefficients();
  for (int q = 0; q < 3; ++q) {
    const Mat2& m = u.factor(q);
    const unsigned bit = 1u << (2 - q);
    Amplitudes::Storage next{};
    for (unsigned idx = 0; idx < 8; ++idx) {
      if (idx & bit) continue;
      const Complex lo = cur[idx];
      const Complex hi = cur[idx | bit];
      next[idx] = m[0] * lo + m[1] * hi;
      next[idx | bit] = m[2] * lo + m[3] * hi;
    }
    cur = next;
  }
  return Amplitudes(cur);
}

// ---------------------------------------------------------------------------
// DensityMatrix

int DensityMatrix::qubits() const {
  switch (dim_) {
    case 2: return 1;
    case 4: return 2;
    default: return 3;
  }
}

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

DensityMatrix DensityMatrix::checked(std::size_t dim, std::vector<Complex> entries) {
  if (dim != 2 && dim != 4 && dim != 8)
    throw std::invalid_argument("density matrix: dimension must be 2, 4 or 8");
  if (entries.size() != dim * dim)
    throw std::invalid_argument("density matrix: expected dim*dim entries");
  if (hermiticity_defect(entries, dim) > kMatTol)
    throw std::invalid_argument("density matrix: not Hermitian");
  DensityMatrix rho(dim, std::move(entries));
  if (std::abs(rho.trace() - 1.0) > kMatTol)
    throw std::invalid_argument("density matrix: trace is not 1");
  const auto eig = hermitian_eigenvalues(rho.entries(), dim);
  if (eig.back() < -kMatTol) throw std::invalid_argument("density matrix: not positive semidefinite");
  return rho;
}

DensityMatrix density_matrix(const Amplitudes& s) {
  std::vector<Complex> e(64);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) e[i * 8 + j] = s[i] * std::conj(s[j]);
  return DensityMatrix(8, std::move(e));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.qubits();
  if (keep.empty() || static_cast<int>(keep.size()) >= n)
    throw std::invalid_argument("partial_trace: keep must be a non-empty proper subset");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= n)
      throw std::invalid_argument("partial_trace: qubit position out of range");
    if (k > 0 && keep[k] <= keep[k - 1])
      throw std::invalid_argument("partial_trace: positions must be strictly increasing");
  }

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

  // Scatter the bits of a sub-index into their positions in the full index.
  auto place = [n](unsigned sub, std::span<const int> positions) {
    unsigned full = 0;
    const std::size_t m = positions.size();
    for (std::size_t k = 0; k < m; ++k)
      if (sub & (1u << (m - 1 - k))) full |= 1u << (n - 1 - positions[k]);
    return full;
  };

  const std::size_t out_dim = std::size_t{1} << keep.size();
  const unsigned env_dim = 1u << traced.size();
  std::vector<Complex> out(out_dim * out_dim);
  for (unsigned i = 0; i < out_dim; ++i) {
    const unsigned row_base = place(i, keep);
    for (unsigned j = 0; j < out_dim; ++j) {
      const unsigned col_base = place(j, keep);
      Complex sum = 0.0;
      for (unsigned e = 0; e < env_dim; ++e) {
        const unsigned env = place(e, traced);
        sum += rho(row_base | env, col_base | env);
      }
      out[i * out_dim + j] = sum;
    }
  }
  return DensityMatrix(out_dim, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Sampling

Amplitudes random_state(Rng& rng) {
  Amplitudes::Storage raw;
  for (auto& z : raw) z = gaussian_complex(rng);
  return normalize(raw);
}

AsdParams random_asd(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, 5> lambda;
  double total = 0.0;
  for (auto& l : lambda) {
    l = std::abs(normal(rng));
    total += l * l;
  }
  const double scale = 1.0 / std::sqrt(total);
  for (auto& l : lambda) l *= scale;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return AsdParams(lambda, angle(rng));
}

LocalUnitary random_local_unitary(Rng& rng) {
  const Mat2 a = haar_unitary(rng);
  const Mat2 b = haar_unitary(rng);
  const Mat2 c = haar_unitary(rng);
  return {a, b, c};
}

}  // namespace tangle
