#include "tangle/quartic.hpp"

#include <cmath>

namespace tangle {

namespace {

ComplexLD principal_cbrt(ComplexLD z) {
  if (z == ComplexLD{}) return {};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0L);
}

// Newton polish on a monic polynomial given by its non-leading coefficients
// (highest degree first). A step is only taken when it lowers |p(x)|, so a
// root sitting on a multiple zero is left alone.
template <std::size_t N>
ComplexLD polish(ComplexLD x, const std::array<ComplexLD, N>& coeffs, int steps) {
  auto eval = [&](ComplexLD at, ComplexLD& derivative) {
    ComplexLD p = 1.0L;
    derivative = 0.0L;
    for (const ComplexLD& a : coeffs) {
      derivative = derivative * at + p;
      p = p * at + a;
    }
    return p;
  };
  for (int i = 0; i < steps; ++i) {
    ComplexLD dp;
    const ComplexLD p = eval(x, dp);
    if (p == ComplexLD{} || dp == ComplexLD{}) break;
    const ComplexLD candidate = x - p / dp;
    ComplexLD unused;
    if (std::abs(eval(candidate, unused)) < std::abs(p)) x = candidate;
    else break;
  }
  return x;
}

}  // namespace

std::array<ComplexLD, 2> solve_monic_quadratic(ComplexLD b, ComplexLD c) {
  const ComplexLD disc = std::sqrt(b * b - 4.0L * c);
  // Pick the sign that adds magnitudes: Re(conj(b) * disc) >= 0.
  const long double sign = (std::conj(b) * disc).real() >= 0.0L ? 1.0L : -1.0L;
  const ComplexLD q = -(b + sign * disc) / 2.0L;
  if (q == ComplexLD{}) return {ComplexLD{}, ComplexLD{}};
  return {q, c / q};
}

std::array<ComplexLD, 3> solve_monic_cubic(ComplexLD b, ComplexLD c, ComplexLD d) {
  if (d == ComplexLD{}) {
    const auto r = solve_monic_quadratic(b, c);
    return {ComplexLD{}, r[0], r[1]};
  }
  const ComplexLD shift = b / 3.0L;
  const ComplexLD p = c - b * b / 3.0L;
  const ComplexLD q = 2.0L * b * b * b / 27.0L - b * c / 3.0L + d;

  const ComplexLD sq = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
  ComplexLD w = -q / 2.0L + sq;
  const ComplexLD alt = -q / 2.0L - sq;
  if (std::abs(alt) > std::abs(w)) w = alt;

  const ComplexLD u = principal_cbrt(w);
  const ComplexLD omega(-0.5L, std::sqrt(3.0L) / 2.0L);
  std::array<ComplexLD, 3> roots;
  if (u == ComplexLD{}) {
    roots = {-shift, -shift, -shift};
  } else {
    const ComplexLD v = -p / (3.0L * u);
    roots[0] = u + v - shift;
    roots[1] = omega * u + std::conj(omega) * v - shift;
    roots[2] = std::conj(omega) * u + omega * v - shift;
  }
  const std::array<ComplexLD, 3> coeffs{b, c, d};
  for (auto& r : roots) r = polish(r, coeffs, 2);
  return roots;
}

std::array<ComplexLD, 4> solve_monic_quartic(ComplexLD b, ComplexLD c, ComplexLD d, ComplexLD e,
                                             int newton_steps) {
  const std::array<ComplexLD, 4> coeffs{b, c, d, e};
  std::array<ComplexLD, 4> roots;

  if (e == ComplexLD{}) {
    const auto r = solve_monic_cubic(b, c, d);
    roots = {ComplexLD{}, r[0], r[1], r[2]};
  } else {
    // Depressed quartic y^4 + p y^2 + q y + r with x = y - b/4.
    const ComplexLD shift = b / 4.0L;
    const ComplexLD b2 = b * b;
    const ComplexLD p = c - 3.0L * b2 / 8.0L;
    const ComplexLD q = d - b * c / 2.0L + b2 * b / 8.0L;
    const ComplexLD r = e - b * d / 4.0L + b2 * c / 16.0L - 3.0L * b2 * b2 / 256.0L;

    if (q == ComplexLD{}) {
      const auto z = solve_monic_quadratic(p, r);
      const ComplexLD y0 = std::sqrt(z[0]);
      const ComplexLD y1 = std::sqrt(z[1]);
      roots = {y0 - shift, -y0 - shift, y1 - shift, -y1 - shift};
    } else {
      // Resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0. The product of its
      // roots is q^2/8 != 0, so the largest one is safely away from zero.
      const auto m_roots = solve_monic_cubic(p, p * p / 4.0L - r, -q * q / 8.0L);
      ComplexLD m = m_roots[0];
      for (const auto& cand : m_roots)
        if (std::abs(cand) > std::abs(m)) m = cand;

      const ComplexLD s = std::sqrt(2.0L * m);
      const ComplexLD k = q / (2.0L * s);
      const auto first = solve_monic_quadratic(-s, p / 2.0L + m + k);
      const auto second = solve_monic_quadratic(s, p / 2.0L + m - k);
      roots = {first[0] - shift, first[1] - shift, second[0] - shift, second[1] - shift};
    }
  }

  for (auto& x : roots) x = polish(x, coeffs, newton_steps);
  return roots;
}

}  // namespace tangle
