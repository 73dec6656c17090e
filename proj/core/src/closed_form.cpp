#include "tangle/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tangle {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double clamp_unit(double x, const char* what) {
  if (!(x >= -kClampTol && x <= 1.0 + kClampTol))
    throw std::domain_error(std::string(what) + " = " + std::to_string(x) + " outside [0, 1]");
  return std::clamp(x, 0.0, 1.0);
}

Complex cj(const Complex& z) { return std::conj(z); }

// Shared shape of the three degree-4 polynomials: the block structure
// differs only in which amplitude indices play which role:
//   2 (|p0|^2 + |p1|^2)(|q2|^2 + |q3|^2) + 2 (|r0|^2 + |r1|^2)(|t2|^2 + |t3|^2)
//   + 2 |p0 q2* + p1 q3*|^2 + 2 |r0 t2* + r1 t3*|^2
//   - 4 Re[(p0 r0* + p1 r1*)(q2 t2* + q3 t3*)]
//   - 4 Re[(p0 t2* + p1 t3*)(q2 r0* + q3 r1*)]
// with (p0, p1, r0, r1, t2, t3, q2, q3) the index map below.
double pair_polynomial(const Amplitudes& s, const std::array<int, 8>& ix) {
  const Complex p0 = s[ix[0]], p1 = s[ix[1]];
  const Complex r0 = s[ix[2]], r1 = s[ix[3]];
  const Complex t2 = s[ix[4]], t3 = s[ix[5]];
  const Complex q2 = s[ix[6]], q3 = s[ix[7]];
  return 2.0 * (std::norm(p0) + std::norm(p1)) * (std::norm(q2) + std::norm(q3)) +
         2.0 * (std::norm(r0) + std::norm(r1)) * (std::norm(t2) + std::norm(t3)) +
         2.0 * std::norm(p0 * cj(q2) + p1 * cj(q3)) +
         2.0 * std::norm(r0 * cj(t2) + r1 * cj(t3)) -
         4.0 * ((p0 * cj(r0) + p1 * cj(r1)) * (q2 * cj(t2) + q3 * cj(t3))).real() -
         4.0 * ((p0 * cj(t2) + p1 * cj(t3)) * (q2 * cj(r0) + q3 * cj(r1))).real();
}

}  // namespace

double theta(const Amplitudes& s) {
  const auto& c = s.coefficients();
  const Complex a = c[0] * c[7] - c[2] * c[5];
  const Complex b = c[1] * c[6] - c[3] * c[4];
  const Complex value = a * a + b * b - 2.0 * (c[0] * c[7] + c[2] * c[5]) * (c[1] * c[6] + c[3] * c[4]) +
                        4.0 * c[0] * c[3] * c[5] * c[6] + 4.0 * c[1] * c[2] * c[4] * c[7];
  return std::abs(value);
}

double three_tangle(const Amplitudes& s) {
  const auto& c = s.coefficients();
  const Complex d = c[0] * c[7] - c[2] * c[5] - c[1] * c[6] + c[3] * c[4];
  const Complex e = (c[0] * c[3] - c[1] * c[2]) * (c[4] * c[7] - c[5] * c[6]);
  return clamp_unit(4.0 * std::abs(d * d - 4.0 * e), "tau_ABC");
}

// Index maps (p0 p1 | r0 r1 | t2 t3 | q2 q3) for the three expansions:
//   Delta: (c0, c1 | c2, c3 | c4, c5 | c6, c7)
//   Phi:   (c0, c2 | c1, c3 | c4, c6 | c5, c7)
//   Psi:   (c0, c4 | c1, c5 | c2, c6 | c3, c7)
double delta(const Amplitudes& s) { return pair_polynomial(s, {0, 1, 2, 3, 4, 5, 6, 7}); }
double phi_poly(const Amplitudes& s) { return pair_polynomial(s, {0, 2, 1, 3, 4, 6, 5, 7}); }
double psi_poly(const Amplitudes& s) { return pair_polynomial(s, {0, 4, 1, 5, 2, 6, 3, 7}); }

TangleSet tangles_closed_form(const Amplitudes& s) {
  TangleSet t;
  t.abc = three_tangle(s);
  t.ab = clamp_unit(delta(s) - t.abc / 2.0, "tau_AB");
  t.ac = clamp_unit(phi_poly(s) - t.abc / 2.0, "tau_AC");
  t.bc = clamp_unit(psi_poly(s) - t.abc / 2.0, "tau_BC");
  t.a_bc = t.ab + t.ac + t.abc;
  t.b_ac = t.ab + t.bc + t.abc;
  t.c_ab = t.ac + t.bc + t.abc;
  return t;
}

TangleSet tangles_asd(const AsdParams& p) {
  const auto& l = p.lambdas();
  const double l0s = l[0] * l[0];
  TangleSet t;
  t.ab = 4.0 * l0s * l[3] * l[3];
  t.ac = 4.0 * l0s * l[2] * l[2];
  // |l1 l4 e^{i phi} - l2 l3|^2 without cancellation between the two terms.
  const double diff = l[1] * l[4] - l[2] * l[3];
  const double half_sin = std::sin(p.phi() / 2.0);
  t.bc = 4.0 * (diff * diff + 4.0 * l[1] * l[2] * l[3] * l[4] * half_sin * half_sin);
  t.abc = 4.0 * l0s * l[4] * l[4];
  t.a_bc = t.ab + t.ac + t.abc;
  t.b_ac = t.ab + t.bc + t.abc;
  t.c_ab = t.ac + t.bc + t.abc;
  return t;
}

InvariantSet invariants_asd(const AsdParams& p) {
  const TangleSet t = tangles_asd(p);
  return {t.bc / 4.0, t.ac / 4.0, t.ab / 4.0, t.abc / 4.0};
}

Alphas alphas(const TangleSet& t) {
  auto one = [](double one_tangle, const char* name) {
    const double a = one_tangle / 4.0;
    if (a > 0.25 + 1e-9 || a < -kClampTol)
      throw std::domain_error(std::string("alpha_") + name + " = " + std::to_string(a) +
                              " outside [0, 1/4]; tangles are inconsistent");
    return std::clamp(a, 0.0, 0.25);
  };
  return {one(t.a_bc, "A"), one(t.b_ac, "B"), one(t.c_ab, "C")};
}

EtaPair marginal_eigenvalues(double alpha) {
  if (!(alpha >= -kClampTol && alpha <= 0.25 + kClampTol))
    throw std::domain_error("alpha = " + std::to_string(alpha) + " outside [0, 1/4]");
  alpha = std::clamp(alpha, 0.0, 0.25);
  const double root = std::sqrt(1.0 - 4.0 * alpha);
  EtaPair e;
  e.major = (1.0 + root) / 2.0;
  // Product of the roots is alpha; avoids cancellation in (1 - root) / 2.
  e.minor = alpha / e.major;
  return e;
}

double entropy_from_alpha(double alpha) {
  const EtaPair e = marginal_eigenvalues(alpha);
  if (e.minor <= 0.0) return 0.0;
  return -(e.major * std::log1p(-e.minor) + e.minor * std::log(e.minor));
}

double entropy_derivative(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.25))
    throw std::domain_error("entropy_derivative: alpha must lie in (0, 1/4)");
  const double root = std::sqrt(1.0 - 4.0 * alpha);
  // -(1/root) ln((1 - root)/(1 + root)) = 2 atanh(root) / root
  return 2.0 * std::atanh(root) / root;
}

double entropy_taylor(double alpha) { return kLn2 - 0.5 + 2.0 * alpha; }

EntropySet entropy_set(const TangleSet& t) {
  EntropySet e;
  e.alpha = alphas(t);
  e.eta_a = marginal_eigenvalues(e.alpha.a);
  e.eta_b = marginal_eigenvalues(e.alpha.b);
  e.eta_c = marginal_eigenvalues(e.alpha.c);
  e.s_a = entropy_from_alpha(e.alpha.a);
  e.s_b = entropy_from_alpha(e.alpha.b);
  e.s_c = entropy_from_alpha(e.alpha.c);
  return e;
}

EntropySet entropy_set(const Amplitudes& s) { return entropy_set(tangles_closed_form(s)); }

double average_tangle(const TangleSet& t) { return (t.ab + t.ac + t.bc) / 3.0; }

double average_entropy(const EntropySet& e) { return (e.s_a + e.s_b + e.s_c) / 3.0; }

double relation_residual(const TangleSet& t, const EntropySet& e) {
  return average_entropy(e) - average_tangle(t) - t.abc / 2.0 - (kLn2 - 0.5);
}

double relation_residual(const Amplitudes& s) {
  const TangleSet t = tangles_closed_form(s);
  return relation_residual(t, entropy_set(t));
}

MeasureReport assemble_report(const TangleSet& t, std::optional<InvariantSet> j) {
  MeasureReport r;
  r.tangles = t;
  r.invariants = j;
  r.entropies = entropy_set(t);
  r.concurrences = {std::sqrt(t.ab), std::sqrt(t.ac), std::sqrt(t.bc)};
  r.avg_tangle = average_tangle(t);
  r.avg_entropy = average_entropy(r.entropies);
  r.relation_residual = relation_residual(t, r.entropies);
  return r;
}

MeasureReport measure_report(const Amplitudes& s) { return assemble_report(tangles_closed_form(s)); }

MeasureReport measure_report(const AsdParams& p) {
  MeasureReport fast = assemble_report(tangles_asd(p), invariants_asd(p));
  const MeasureReport general = measure_report(asd_to_amplitudes(p));

  const std::array<std::pair<const char*, std::pair<double, double>>, 10> fields{{
      {"tau_ab", {fast.tangles.ab, general.tangles.ab}},
      {"tau_ac", {fast.tangles.ac, general.tangles.ac}},
      {"tau_bc", {fast.tangles.bc, general.tangles.bc}},
      {"tau_abc", {fast.tangles.abc, general.tangles.abc}},
      {"s_a", {fast.entropies.s_a, general.entropies.s_a}},
      {"s_b", {fast.entropies.s_b, general.entropies.s_b}},
      {"s_c", {fast.entropies.s_c, general.entropies.s_c}},
      {"avg_tangle", {fast.avg_tangle, general.avg_tangle}},
      {"avg_entropy", {fast.avg_entropy, general.avg_entropy}},
      {"residual", {fast.relation_residual, general.relation_residual}},
  }};
  for (const auto& [name, values] : fields)
    if (std::abs(values.first - values.second) > 1e-10)
      throw std::logic_error(std::string("measure_report: ASD and general paths disagree on ") + name);
  return fast;
}

}  // namespace tangle
