#include "tangle/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

#include "tangle/classify.hpp"
#include "tangle/closed_form.hpp"
#include "tangle/format.hpp"
#include "tangle/oracle.hpp"
#include "tangle/presets.hpp"

namespace tangle {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTaylorGap = kLn2 - 0.5;
constexpr double kAlphaFloor = 1e-14;

// S'(alpha) with the removable limit 2 at alpha = 1/4 and the divergent end
// floored, so that prefactors vanishing with alpha win the 0 * inf product.
double slope(double alpha) {
  alpha = std::max(alpha, kAlphaFloor);
  if (0.25 - alpha <= kAlphaFloor) return 2.0;
  return entropy_derivative(alpha);
}

double entropy_clamped(double alpha) { return entropy_from_alpha(std::clamp(alpha, 0.0, 0.25)); }

std::vector<double> abs_normal(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = std::abs(normal(rng)) + 1e-3;
  return x;
}

// --- tangle sum over a subset of the lambdas ---------------------------------

// 3A = tau_AB + tau_AC + tau_BC as a function of all five lambdas at fixed
// cos(phi), together with its gradient.
double tangle_sum(const std::array<double, 5>& l, double cos_phi) {
  const double b = l[1] * l[1] * l[4] * l[4] + l[2] * l[2] * l[3] * l[3] -
                   2.0 * cos_phi * l[1] * l[2] * l[3] * l[4];
  return 4.0 * (l[0] * l[0] * (l[2] * l[2] + l[3] * l[3]) + b);
}

std::array<double, 5> tangle_sum_gradient(const std::array<double, 5>& l, double cos_phi) {
  const double c = cos_phi;
  std::array<double, 5> g;
  g[0] = 8.0 * l[0] * (l[2] * l[2] + l[3] * l[3]);
  g[1] = 4.0 * (2.0 * l[1] * l[4] * l[4] - 2.0 * c * l[2] * l[3] * l[4]);
  g[2] = 4.0 * (2.0 * l[0] * l[0] * l[2] + 2.0 * l[2] * l[3] * l[3] - 2.0 * c * l[1] * l[3] * l[4]);
  g[3] = 4.0 * (2.0 * l[0] * l[0] * l[3] + 2.0 * l[3] * l[2] * l[2] - 2.0 * c * l[1] * l[2] * l[4]);
  g[4] = 4.0 * (2.0 * l[4] * l[1] * l[1] - 2.0 * c * l[1] * l[2] * l[3]);
  return g;
}

// Lambdas in `active` are radius * x for x on the unit sphere; the rest are
// held at `fixed`.
struct Subset {
  std::vector<int> active;
  std::array<double, 5> fixed{};
  double radius = 1.0;
  double cos_phi = 1.0;
  double scale = 1.0;  // objective = scale * tangle_sum

  std::array<double, 5> lambdas(std::span<const double> x) const {
    std::array<double, 5> l = fixed;
    for (std::size_t k = 0; k < active.size(); ++k) l[active[k]] = radius * x[k];
    return l;
  }

  SphereProblem problem() const {
    SphereProblem p;
    p.dim = active.size();
    p.value = [*this](std::span<const double> x) { return scale * tangle_sum(lambdas(x), cos_phi); };
    p.gradient = [*this](std::span<const double> x, std::span<double> g) {
      const auto full = tangle_sum_gradient(lambdas(x), cos_phi);
      for (std::size_t k = 0; k < active.size(); ++k) g[k] = scale * radius * full[active[k]];
    };
    return p;
  }
};

std::array<double, 5> clean(std::array<double, 5> l) {
  double total = 0.0;
  for (double& v : l) {
    v = std::max(v, 0.0);
    total += v * v;
  }
  const double s = 1.0 / std::sqrt(total);
  for (double& v : l) v *= s;
  return l;
}

std::vector<AscentResult> multistart(const SphereProblem& problem, int starts, Rng& rng) {
  if (starts < 1) throw std::invalid_argument("multistart: need at least one start");
  std::vector<AscentResult> runs;
  runs.reserve(starts);
  for (int s = 0; s < starts; ++s)
    runs.push_back(maximize_on_sphere(problem, abs_normal(problem.dim, rng)));
  return runs;
}

const AscentResult& best_of(const std::vector<AscentResult>& runs) {
  return *std::max_element(runs.begin(), runs.end(),
                           [](const auto& a, const auto& b) { return a.value < b.value; });
}

ExtremumResult subset_extremum(const Subset& sub, double phi, int starts, Rng& rng) {
  const auto runs = multistart(sub.problem(), starts, rng);
  const AscentResult& best = best_of(runs);
  return {AsdParams(clean(sub.lambdas(best.x)), phi), best.value, best.iterations, best.converged,
          best.kkt_residual};
}

// --- W class ------------------------------------------------------------------

struct WAlphas {
  std::array<double, 3> alpha;                 // A, B, C
  std::array<std::array<double, 3>, 3> grad;  // d alpha_X / d(l0, l2, l3)
};

WAlphas w_alphas(std::span<const double> x) {
  const double l0 = x[0], l2 = x[1], l3 = x[2];
  const double s0 = l0 * l0, s2 = l2 * l2, s3 = l3 * l3;
  WAlphas w;
  w.alpha = {s0 * (s2 + s3), s3 * (s0 + s2), s2 * (s0 + s3)};
  w.grad[0] = {2.0 * l0 * (s2 + s3), 2.0 * s0 * l2, 2.0 * s0 * l3};
  w.grad[1] = {2.0 * l0 * s3, 2.0 * l2 * s3, 2.0 * l3 * (s0 + s2)};
  w.grad[2] = {2.0 * l0 * s2, 2.0 * l2 * (s0 + s3), 2.0 * l3 * s2};
  return w;
}

AsdParams w_params(std::span<const double> x) {
  const auto l = clean({x[0], 0.0, x[1], x[2], 0.0});
  return AsdParams(l, 0.0);
}

// --- suite bookkeeping ------------------------------------------------------------

struct Tally {
  std::size_t tested = 0;
  std::size_t violations = 0;
  std::optional<std::string> first;

  void record(bool ok, const std::string& state) {
    ++tested;
    if (!ok) {
      ++violations;
      if (!first) first = state;
    }
  }
};

void add_tally(SuiteReport& r, std::string claim, const Tally& t, std::string extra = {}) {
  ClaimCheck c;
  c.claim = std::move(claim);
  c.passed = t.violations == 0;
  c.detail = std::to_string(t.violations) + " violations in " + std::to_string(t.tested) + " checks";
  if (!extra.empty()) c.detail += "; " + extra;
  if (!c.passed && !r.counterexample && t.first) r.counterexample = *t.first;
  r.checks.push_back(std::move(c));
}

void add_check(SuiteReport& r, std::string claim, bool passed, std::string detail,
               const std::string& state = {}) {
  if (!passed && !r.counterexample && !state.empty()) r.counterexample = state;
  r.checks.push_back({std::move(claim), true, passed, std::move(detail)});
}

void add_note(SuiteReport& r, std::string claim, bool holds, std::string detail) {
  r.checks.push_back({std::move(claim), false, holds, std::move(detail)});
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

struct Sample {
  std::string state;
  TangleSet t;
  EntropySet e;
  std::optional<InvariantSet> j;
  Alphas det;  // determinants of the single-qubit marginals
};

Alphas marginal_determinants(const Amplitudes& s) {
  const DensityMatrix rho = density_matrix(s);
  auto det = [&](int q) {
    const DensityMatrix m = partial_trace(rho, {q});
    return (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  };
  return {det(qubit::A), det(qubit::B), det(qubit::C)};
}

Sample sample_from(const AsdParams& p) {
  const MeasureReport r = measure_report(p);
  return {describe(p), r.tangles, r.entropies, r.invariants,
          marginal_determinants(asd_to_amplitudes(p))};
}

Sample sample_from(const Amplitudes& s) {
  const TangleSet t = tangles_closed_form(s);
  return {describe(s), t, entropy_set(t), std::nullopt, marginal_determinants(s)};
}

AsdParams tied_asd(Rng& rng, int pattern) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, 5> l;
  for (double& v : l) v = std::abs(normal(rng));
  switch (pattern) {
    case 0: l[3] = l[2]; break;             // tau_AB = tau_AC
    case 1: l[1] = 0.0; l[3] = l[0]; break;  // tau_AC = tau_BC
    default: l[1] = 0.0; l[2] = l[0]; break; // tau_AB = tau_BC
  }
  double total = 0.0;
  for (double v : l) total += v * v;
  const double s = 1.0 / std::sqrt(total);
  for (double& v : l) v *= s;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return AsdParams(l, angle(rng));
}

Sample draw_proposition_sample(std::size_t i, Rng& rng) {
  switch (i % 5) {
    case 0: return sample_from(random_state(rng));
    case 1: return sample_from(random_asd(rng));
    default: return sample_from(tied_asd(rng, static_cast<int>(i % 5) - 2));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CKW cases

const std::array<CkwCase, 8>& ckw_cases() {
  static const std::array<CkwCase, 8> cases{{
      {1, "lambda1 = lambda2 = lambda3 = 0", 0.0, false},
      {2, "lambda1 = lambda2 = 0, lambda3 != 0", 1.0, true},
      {3, "lambda1 = lambda3 = 0, lambda2 != 0", 1.0, true},
      {4, "lambda2 = lambda3 = 0, lambda1 != 0", 1.0, true},
      {5, "lambda1 = 0, lambda2 lambda3 != 0", 4.0 / 3.0, true},
      {6, "lambda2 = 0, lambda1 lambda3 != 0", 0.5, false},
      {7, "lambda3 = 0, lambda1 lambda2 != 0", 0.5, false},
      {8, "lambda1 lambda2 lambda3 != 0", 1.0, false},
  }};
  return cases;
}

CkwCheck ckw_case_check(const AsdParams& p) {
  const auto& l = p.lambdas();
  if (!(l[0] * l[4] > kZeroTol))
    throw std::invalid_argument("ckw_case_check: state is not in the GHZ class");
  const bool z1 = l[1] <= kZeroTol, z2 = l[2] <= kZeroTol, z3 = l[3] <= kZeroTol;
  int id;
  if (z1 && z2 && z3) id = 1;
  else if (z1 && z2) id = 2;
  else if (z1 && z3) id = 3;
  else if (z2 && z3) id = 4;
  else if (z1) id = 5;
  else if (z2) id = 6;
  else if (z3) id = 7;
  else id = 8;

  CkwCheck out;
  out.ckw = ckw_cases()[id - 1];
  const TangleSet t = tangles_asd(p);
  out.sum = t.ab + t.ac + t.bc;
  out.satisfied = out.ckw.strict ? out.sum < out.ckw.bound : out.sum <= out.ckw.bound + 1e-9;
  return out;
}

namespace {

// Indices of lambda1..lambda3 forced to zero by each case.
std::vector<int> ckw_zeros(int id) {
  switch (id) {
    case 1: return {1, 2, 3};
    case 2: return {1, 2};
    case 3: return {1, 3};
    case 4: return {2, 3};
    case 5: return {1};
    case 6: return {2};
    case 7: return {3};
    case 8: return {};
  }
  throw std::invalid_argument("CKW case id must be 1..8");
}

}  // namespace

AsdParams sample_ckw_case(int id, Rng& rng) {
  const auto zeros = ckw_zeros(id);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, 5> l;
  for (double& v : l) v = std::abs(normal(rng)) + 1e-6;
  for (int z : zeros) l[z] = 0.0;
  double total = 0.0;
  for (double v : l) total += v * v;
  const double s = 1.0 / std::sqrt(total);
  for (double& v : l) v *= s;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return AsdParams(l, angle(rng));
}

ExtremumResult maximize_ckw_sum(int id, Rng& rng, int starts) {
  const auto zeros = ckw_zeros(id);
  Subset sub;
  for (int i = 0; i < 5; ++i)
    if (std::find(zeros.begin(), zeros.end(), i) == zeros.end()) sub.active.push_back(i);
  sub.cos_phi = -1.0;
  return subset_extremum(sub, std::numbers::pi, starts, rng);
}

// ---------------------------------------------------------------------------
// W class

SphereProblem w_class_entropy_problem() {
  SphereProblem p;
  p.dim = 3;
  p.value = [](std::span<const double> x) {
    const WAlphas w = w_alphas(x);
    return (entropy_clamped(w.alpha[0]) + entropy_clamped(w.alpha[1]) +
            entropy_clamped(w.alpha[2])) /
           3.0;
  };
  p.gradient = [](std::span<const double> x, std::span<double> g) {
    const WAlphas w = w_alphas(x);
    for (int k = 0; k < 3; ++k) g[k] = 0.0;
    for (int m = 0; m < 3; ++m) {
      const double s = slope(w.alpha[m]) / 3.0;
      for (int k = 0; k < 3; ++k) g[k] += s * w.grad[m][k];
    }
  };
  return p;
}

std::array<double, 3> w_class_stationarity(const AsdParams& p) {
  const double l0 = p.lambda(0), l2 = p.lambda(2), l3 = p.lambda(3);
  const std::array<double, 3> x{l0, l2, l3};
  const WAlphas w = w_alphas(x);
  // ln(eta2 / eta1) / sqrt(1 - 4 alpha), tending to -2 at alpha = 1/4.
  auto d = [](double alpha) {
    const double root = std::sqrt(std::max(1.0 - 4.0 * alpha, 0.0));
    if (root < 1e-7) return -2.0;
    const EtaPair e = marginal_eigenvalues(alpha);
    return std::log(e.minor / e.major) / root;
  };
  const double da = (1.0 - 2.0 * l0 * l0) * d(w.alpha[0]);
  const double db = (1.0 - 2.0 * l3 * l3) * d(w.alpha[1]);
  const double dc = (1.0 - 2.0 * l2 * l2) * d(w.alpha[2]);
  return {da - dc, da - db, db - dc};
}

ExtremumResult maximize_avg_entropy_w_class(Rng& rng, int starts) {
  const auto runs = multistart(w_class_entropy_problem(), starts, rng);
  const AscentResult& best = best_of(runs);
  return {w_params(best.x), best.value, best.iterations, best.converged, best.kkt_residual};
}

ExtremumResult maximize_avg_entropy_w_class() {
  Rng rng(20240101);
  return maximize_avg_entropy_w_class(rng);
}

// ---------------------------------------------------------------------------
// Average tangle

ExtremumResult maximize_avg_tangle_case(AvgTangleCase c, double parameter, Rng& rng, int starts) {
  Subset sub;
  sub.scale = 1.0 / 3.0;
  switch (c) {
    case AvgTangleCase::Lambda2Zero:
      sub.active = {0, 1, 3, 4};
      return subset_extremum(sub, 0.0, starts, rng);
    case AvgTangleCase::Lambda3Zero:
      sub.active = {0, 1, 2, 4};
      return subset_extremum(sub, 0.0, starts, rng);
    case AvgTangleCase::Lambda1Zero: {
      if (!(parameter >= 0.0 && parameter < 1.0))
        throw std::invalid_argument("lambda4 must lie in [0, 1)");
      sub.active = {0, 2, 3};
      sub.fixed[4] = parameter;
      sub.radius = std::sqrt(1.0 - parameter * parameter);
      return subset_extremum(sub, 0.0, starts, rng);
    }
    case AvgTangleCase::SymmetricFamily: {
      if (!(parameter > 0.0 && parameter < 1.0))
        throw std::invalid_argument("lambda0^2 must lie in (0, 1)");
      // lambda1..4 all equal t; only phi is free, carried as (cos, sin).
      const double t2 = (1.0 - parameter) / 4.0;
      const double base = 2.0 * parameter * t2;
      SphereProblem p;
      p.dim = 2;
      p.nonnegative = false;
      p.value = [=](std::span<const double> u) {
        return (4.0 / 3.0) * (base + t2 * t2 * ((u[0] - 1.0) * (u[0] - 1.0) + u[1] * u[1]));
      };
      p.gradient = [=](std::span<const double> u, std::span<double> g) {
        const double k = (4.0 / 3.0) * t2 * t2 * 2.0;
        g[0] = k * (u[0] - 1.0);
        g[1] = k * u[1];
      };
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      std::vector<AscentResult> runs;
      for (int s = 0; s < starts; ++s) {
        const double a = angle(rng);
        runs.push_back(maximize_on_sphere(p, {std::cos(a), std::sin(a)}));
      }
      const AscentResult& best = best_of(runs);
      const double t = std::sqrt(t2);
      const AsdParams arg({std::sqrt(parameter), t, t, t, t}, std::atan2(best.x[1], best.x[0]));
      return {arg, best.value, best.iterations, best.converged, best.kkt_residual};
    }
  }
  throw std::invalid_argument("unknown average-tangle case");
}

ExtremumResult maximize_avg_tangle_fixed_lambda0(double lambda0_sq, Rng& rng, int starts) {
  if (!(lambda0_sq > 0.0 && lambda0_sq < 1.0))
    throw std::invalid_argument("lambda0^2 must lie in (0, 1)");
  Subset sub;
  sub.scale = 1.0 / 3.0;
  sub.active = {1, 2, 3, 4};
  sub.fixed[0] = std::sqrt(lambda0_sq);
  sub.radius = std::sqrt(1.0 - lambda0_sq);
  sub.cos_phi = -1.0;
  return subset_extremum(sub, std::numbers::pi, starts, rng);
}

// ---------------------------------------------------------------------------
// Suites

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return !c.asserted || c.passed; });
}

double entropy_slope_gap(double alpha_lo) {
  if (!(alpha_lo > 0.0 && alpha_lo < 0.25))
    throw std::invalid_argument("entropy_slope_gap: alpha_lo must lie in (0, 1/4)");
  constexpr int kGrid = 10000;
  double worst = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double a = alpha_lo + (0.25 - alpha_lo) * i / kGrid;
    worst = std::max(worst, std::abs(slope(a) - 2.0));
  }
  return worst;
}

SuiteReport proposition_suite(std::size_t n_samples, Rng& rng) {
  if (n_samples < 1) throw std::invalid_argument("proposition_suite: n_samples must be >= 1");
  constexpr double kTangleTie = 1e-12;
  constexpr double kEntropyTie = 1e-10;
  constexpr double kOrderGap = 1e-9;
  constexpr double kAlphaLo = 0.05;
  const double e_max = entropy_slope_gap(kAlphaLo);

  Tally pair_tie, pair_order, one_tie, one_order, j_tie, j_order, exact_diff, factor_two, j_factor;
  double ratio_lo = std::numeric_limits<double>::infinity(), ratio_hi = 0.0;
  double ratio_lo_bounded = ratio_lo, ratio_hi_bounded = 0.0;

  for (std::size_t i = 0; i < n_samples; ++i) {
    const Sample s = draw_proposition_sample(i, rng);
    const TangleSet& t = s.t;
    const EntropySet& e = s.e;

    // (tau_x, tau_y, S(rho_x), S(rho_y), alpha difference matching tau_x - tau_y)
    struct Pair { double tx, ty, sx, sy, dalpha, alo; };
    const std::array<Pair, 3> pairs{{
        {t.ac, t.bc, e.s_ac(), e.s_bc(), s.det.a - s.det.b, std::min(e.alpha.a, e.alpha.b)},
        {t.ab, t.bc, e.s_ab(), e.s_bc(), s.det.a - s.det.c, std::min(e.alpha.a, e.alpha.c)},
        {t.ab, t.ac, e.s_ab(), e.s_ac(), s.det.b - s.det.c, std::min(e.alpha.b, e.alpha.c)},
    }};
    for (const Pair& p : pairs) {
      const double dt = p.tx - p.ty;
      const double ds = p.sx - p.sy;
      pair_tie.record((std::abs(dt) <= kTangleTie) == (std::abs(ds) <= kEntropyTie), s.state);
      if (std::abs(dt) > kOrderGap) pair_order.record(sign(dt) == sign(-ds), s.state);
      exact_diff.record(std::abs(dt - 4.0 * p.dalpha) <= 1e-12, s.state);
      if (p.alo >= kAlphaLo)
        factor_two.record(std::abs(dt - 2.0 * (p.sy - p.sx)) <= 2.0 * e_max * std::abs(p.dalpha) + 1e-12,
                          s.state);
      if (std::abs(dt) > 1e-6) {
        const double ratio = dt / (p.sy - p.sx);
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
        if (p.alo >= kAlphaLo) {
          ratio_lo_bounded = std::min(ratio_lo_bounded, ratio);
          ratio_hi_bounded = std::max(ratio_hi_bounded, ratio);
        }
      }
    }

    // One-tangles against single-qubit entropies.
    const std::array<std::array<double, 4>, 3> ones{{
        {t.a_bc, t.b_ac, e.s_a, e.s_b},
        {t.a_bc, t.c_ab, e.s_a, e.s_c},
        {t.b_ac, t.c_ab, e.s_b, e.s_c},
    }};
    for (const auto& o : ones) {
      const double dt = o[0] - o[1];
      const double ds = o[2] - o[3];
      one_tie.record((std::abs(dt) <= kTangleTie) == (std::abs(ds) <= kEntropyTie), s.state);
      if (std::abs(dt) > kOrderGap) one_order.record(sign(dt) == sign(ds), s.state);
    }

    if (s.j) {
      const InvariantSet& j = *s.j;
      // (S_x - S_y, J difference, alpha difference, min alpha)
      const std::array<std::array<double, 4>, 3> js{{
          {e.s_a - e.s_b, j.j2 - j.j1, e.alpha.a - e.alpha.b, std::min(e.alpha.a, e.alpha.b)},
          {e.s_a - e.s_c, j.j3 - j.j1, e.alpha.a - e.alpha.c, std::min(e.alpha.a, e.alpha.c)},
          {e.s_b - e.s_c, j.j3 - j.j2, e.alpha.b - e.alpha.c, std::min(e.alpha.b, e.alpha.c)},
      }};
      for (const auto& q : js) {
        j_tie.record((std::abs(q[1]) <= kTangleTie) == (std::abs(q[0]) <= kEntropyTie), s.state);
        if (std::abs(q[1]) > kOrderGap) j_order.record(sign(q[0]) == sign(q[1]), s.state);
        if (q[3] >= kAlphaLo)
          j_factor.record(std::abs(q[0] - 2.0 * q[1]) <= e_max * std::abs(q[2]) + 1e-12, s.state);
      }
    }
  }

  SuiteReport r;
  r.name = "propositions";
  add_tally(r, "equal pairwise tangles iff equal pair-marginal entropies", pair_tie);
  add_tally(r, "larger pairwise tangle iff smaller pair-marginal entropy", pair_order);
  add_tally(r, "equal one-tangles iff equal single-qubit entropies", one_tie);
  add_tally(r, "larger one-tangle iff larger single-qubit entropy", one_order);
  add_tally(r, "equal J invariants iff equal single-qubit entropies", j_tie);
  add_tally(r, "larger J invariant iff larger single-qubit entropy", j_order);
  add_tally(r, "tangle difference equals 4 x marginal determinant difference", exact_diff);
  add_tally(r, "tangle difference within 2 E_max |dalpha| of twice the entropy difference (alphas >= 0.05)",
            factor_two, "E_max = " + format_human(e_max));
  add_tally(r, "entropy difference within E_max |dalpha| of twice the J difference (alphas >= 0.05)",
            j_factor, "E_max = " + format_human(e_max));
  add_note(r, "tangle difference / entropy difference ratio", true,
           "all samples [" + format_human(ratio_lo) + ", " + format_human(ratio_hi) +
               "], alphas >= 0.05 [" + format_human(ratio_lo_bounded) + ", " +
               format_human(ratio_hi_bounded) + "]");

  // Fixed states.
  {
    const MeasureReport w = measure_report(presets::w());
    const TangleSet& t = w.tangles;
    const EntropySet& e = w.entropies;
    const bool ok = std::abs(t.ab - t.ac) <= kTangleTie && std::abs(t.ac - t.bc) <= kTangleTie &&
                    std::abs(e.s_a - e.s_b) <= kEntropyTie && std::abs(e.s_b - e.s_c) <= kEntropyTie;
    add_check(r, "W state: equal tangles and equal entropies", ok,
              "tau = " + format_human(t.ab) + ", S = " + format_human(e.s_a), describe(presets::w()));
  }
  {
    const MeasureReport k = measure_report(presets::kappa());
    const TangleSet& t = k.tangles;
    const EntropySet& e = k.entropies;
    const bool ok = std::abs(t.ab - t.ac) <= kTangleTie && t.ac > t.bc + kOrderGap &&
                    std::abs(e.s_b - e.s_c) <= kEntropyTie && e.s_a > e.s_b + kOrderGap;
    add_check(r, "kappa: tau_AB = tau_AC > tau_BC, S_B = S_C < S_A", ok,
              "S_A = " + format_human(e.s_a) + ", S_B = " + format_human(e.s_b),
              describe(presets::kappa()));
  }
  return r;
}

SuiteReport averages_relation_suite(std::size_t n_samples, Rng& rng) {
  if (n_samples < 1) throw std::invalid_argument("averages_relation_suite: n_samples must be >= 1");
  Tally residual, spread, near_ghz;
  double min_gap = std::numeric_limits<double>::infinity();
  double max_gap = -min_gap;
  std::normal_distribution<double> normal(0.0, 1.0);

  for (std::size_t i = 0; i < n_samples; ++i) {
    TangleSet t;
    std::string state;
    switch (i % 3) {
      case 0: {
        const Amplitudes s = random_state(rng);
        t = tangles_closed_form(s);
        state = describe(s);
        break;
      }
      case 1: {
        const AsdParams p = random_asd(rng);
        t = tangles_asd(p);
        state = describe(p);
        break;
      }
      default: {
        const double h = std::numbers::sqrt2 / 2.0;
        std::array<double, 5> l{h + 0.003 * normal(rng), 0.01 * std::abs(normal(rng)),
                                0.01 * std::abs(normal(rng)), 0.01 * std::abs(normal(rng)),
                                h + 0.003 * normal(rng)};
        l = clean(l);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const AsdParams p(l, angle(rng));
        t = tangles_asd(p);
        state = describe(p);
        break;
      }
    }
    const EntropySet e = entropy_set(t);
    const double res = relation_residual(t, e);
    const double a = average_tangle(t);
    const double m = average_entropy(e);
    residual.record(res >= -kTaylorGap - 1e-9 && res <= 1e-9, state);
    spread.record(m - a >= -1e-9 && m - a <= kLn2 + 1e-9, state);
    min_gap = std::min(min_gap, m - a);
    max_gap = std::max(max_gap, m - a);
    if (t.abc >= 0.999) near_ghz.record(m >= kLn2 - 0.01 && a <= 0.01, state);
  }

  SuiteReport r;
  r.name = "averages";
  add_tally(r, "m - A - tau_ABC/2 - (ln 2 - 1/2) lies in [-(ln 2 - 1/2), 0]", residual);
  add_tally(r, "0 <= m - A <= ln 2", spread);
  add_tally(r, "tau_ABC >= 0.999 forces m >= ln 2 - 0.01 and A <= 0.01", near_ghz);
  add_note(r, "empirical range of m - A against the estimate ln 2 - 1/2 <= m - A", min_gap >= kTaylorGap,
           "min " + format_human(min_gap) + ", max " + format_human(max_gap) + ", ln 2 - 1/2 = " +
               format_human(kTaylorGap));

  const TangleSet ghz = tangles_asd(presets::ghz());
  const double ghz_res = relation_residual(ghz, entropy_set(ghz));
  add_check(r, "GHZ: residual is 0", std::abs(ghz_res) <= 1e-12, "residual " + format_exact(ghz_res),
            describe(presets::ghz()));

  const Amplitudes product = Amplitudes::basis(0);
  const double prod_res = relation_residual(product);
  add_check(r, "product state: residual is -(ln 2 - 1/2)", std::abs(prod_res + kTaylorGap) <= 1e-12,
            "residual " + format_exact(prod_res), describe(product));

  const MeasureReport w = measure_report(presets::w());
  const double w_gap = w.avg_entropy - w.avg_tangle;
  add_check(r, "W: m - A = delta - 4/9 within [ln 2 - 1/2 - 0.01, ln 2]",
            w_gap >= kTaylorGap - 0.01 && w_gap <= kLn2 && std::abs(w_gap - (presets::w_entropy() - 4.0 / 9.0)) <= 1e-12,
            "m - A = " + format_human(w_gap), describe(presets::w()));
  return r;
}

SuiteReport monogamy_suite(std::size_t n_samples, Rng& rng) {
  if (n_samples < 1) throw std::invalid_argument("monogamy_suite: n_samples must be >= 1");
  Tally closed_ineq, closed_eq, oracle_ineq, oracle_eq;

  auto check = [&](const Amplitudes& s, const std::string& state) {
    const Alphas det = marginal_determinants(s);
    const std::array<double, 3> one{4.0 * det.a, 4.0 * det.b, 4.0 * det.c};

    const TangleSet t = tangles_closed_form(s);
    closed_ineq.record(t.ab + t.ac <= one[0] + 1e-10 && t.ab + t.bc <= one[1] + 1e-10 &&
                           t.ac + t.bc <= one[2] + 1e-10,
                       state);
    closed_eq.record(std::abs(t.ab + t.ac + t.abc - one[0]) <= 1e-10 &&
                         std::abs(t.ab + t.bc + t.abc - one[1]) <= 1e-10 &&
                         std::abs(t.ac + t.bc + t.abc - one[2]) <= 1e-10,
                     state);

    const TangleSet o = measures_oracle(s).tangles;
    oracle_ineq.record(o.ab + o.ac <= one[0] + 1e-10 && o.ab + o.bc <= one[1] + 1e-10 &&
                           o.ac + o.bc <= one[2] + 1e-10,
                       state);
    // The oracle's tau_ABC is fixed by the A identity; B and C are independent.
    oracle_eq.record(std::abs(o.ab + o.bc + o.abc - one[1]) <= 1e-10 &&
                         std::abs(o.ac + o.bc + o.abc - one[2]) <= 1e-10,
                     state);
  };

  for (std::size_t i = 0; i < n_samples; ++i) {
    if (i % 2 == 0) {
      const Amplitudes s = random_state(rng);
      check(s, describe(s));
    } else {
      const AsdParams p = random_asd(rng);
      check(asd_to_amplitudes(p), describe(p));
    }
  }
  for (const AsdParams& p : {presets::ghz(), presets::w()}) check(asd_to_amplitudes(p), describe(p));

  SuiteReport r;
  r.name = "monogamy";
  add_tally(r, "tau_XY + tau_XZ <= tau_X(YZ) (closed form)", closed_ineq);
  add_tally(r, "tau_XY + tau_XZ + tau_ABC = 4 det rho_X (closed form)", closed_eq);
  add_tally(r, "tau_XY + tau_XZ <= tau_X(YZ) (oracle)", oracle_ineq);
  add_tally(r, "tau_XY + tau_XZ + tau_ABC = 4 det rho_X (oracle)", oracle_eq);
  return r;
}

SuiteReport ckw_suite(std::size_t n_samples, Rng& rng) {
  if (n_samples < 1) throw std::invalid_argument("ckw_suite: n_samples must be >= 1");
  SuiteReport r;
  r.name = "ckw";
  for (const CkwCase& c : ckw_cases()) {
    Tally tally;
    double max_sum = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
      const AsdParams p = sample_ckw_case(c.id, rng);
      const CkwCheck chk = ckw_case_check(p);
      if (chk.ckw.id != c.id) throw std::logic_error("ckw_suite: sampler produced the wrong pattern");
      tally.record(chk.satisfied, describe(p));
      max_sum = std::max(max_sum, chk.sum);
    }
    const ExtremumResult opt = maximize_ckw_sum(c.id, rng);
    const std::string bound = std::string(c.strict ? "< " : "<= ") + format_human(c.bound);
    add_tally(r, "case " + std::to_string(c.id) + " (" + std::string(c.pattern) + "): sum " + bound,
              tally,
              "sampled max " + format_human(max_sum) + ", optimized sup " + format_human(opt.value));
    if (c.id == 6 || c.id == 7) {
      const bool reaches = opt.value >= c.bound - 1e-3 && opt.value <= c.bound + 1e-9;
      add_check(r, "case " + std::to_string(c.id) + ": optimized maximum approaches 1/2", reaches,
                "optimized sup " + format_human(opt.value) + " at " + describe(opt.argmax),
                describe(opt.argmax));
    }
  }
  return r;
}

SuiteReport extrema_suite(Rng& rng) {
  SuiteReport r;
  r.name = "extrema";
  const double inv_sqrt3 = std::numbers::inv_sqrt3;
  const double delta = presets::w_entropy();

  // Average entropy over the W class.
  {
    const SphereProblem prob = w_class_entropy_problem();
    const auto runs = multistart(prob, 20, rng);
    bool all_converged = true;
    double spread = 0.0;
    for (const auto& run : runs) {
      all_converged = all_converged && run.converged;
      for (double v : run.x) spread = std::max(spread, std::abs(v - inv_sqrt3));
    }
    const AscentResult& best = best_of(runs);
    const AsdParams arg = w_params(best.x);
    add_check(r, "W-class average entropy: 20 starts converge to lambda0 = lambda2 = lambda3 = 1/sqrt 3",
              all_converged && spread <= 1e-6,
              "max |lambda - 1/sqrt 3| = " + format_human(spread) + ", kkt " + format_human(best.kkt_residual),
              describe(arg));
    add_check(r, "W-class average entropy: maximum equals (3 ln 3 - 2 ln 2)/3",
              std::abs(best.value - delta) <= 1e-9,
              "m = " + format_exact(best.value) + ", iterations " + std::to_string(best.iterations),
              describe(arg));

    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const auto x = project_to_sphere(abs_normal(3, rng), true);
      worst = std::max(worst, tangent_gradient_check(prob, x));
    }
    add_check(r, "W-class average entropy: analytic gradient matches central differences", worst <= 1e-5,
              "max relative error " + format_human(worst));

    const auto st = w_class_stationarity(arg);
    const double st_max = std::max({std::abs(st[0]), std::abs(st[1]), std::abs(st[2])});
    add_check(r, "W-class average entropy: Lagrange stationarity conditions hold at the maximiser",
              st_max <= 1e-8, "max residual " + format_human(st_max), describe(arg));
  }

  // Average tangle with lambda2 = 0 or lambda3 = 0.
  for (const AvgTangleCase c : {AvgTangleCase::Lambda2Zero, AvgTangleCase::Lambda3Zero}) {
    const bool no2 = c == AvgTangleCase::Lambda2Zero;
    const std::string label = no2 ? "lambda2 = 0" : "lambda3 = 0";
    const std::array<double, 5> quarter =
        no2 ? std::array<double, 5>{0.5, 0.5, 0.0, 0.5, 0.5} : std::array<double, 5>{0.5, 0.5, 0.5, 0.0, 0.5};
    const ExtremumResult e = maximize_avg_tangle_case(c, 0.0, rng);
    double dist = 0.0;
    for (int i = 0; i < 5; ++i) dist = std::max(dist, std::abs(e.argmax.lambda(i) - quarter[i]));
    add_check(r, std::string("average tangle with ") + label + ": maximum 1/6 at the quarter-amplitude state",
              e.converged && std::abs(e.value - 1.0 / 6.0) <= 1e-8 && dist <= 1e-6,
              "found A = " + format_exact(e.value) + " at " + describe(e.argmax), describe(e.argmax));

    // Second-order probe at the quarter point: shift weight between the two
    // products lambda0 lambda_k and lambda1 lambda4.
    const int k = no2 ? 3 : 2;
    auto a_at = [&](double eps) {
      std::array<double, 5> l = quarter;
      l[0] = l[k] = std::sqrt(0.25 + eps);
      l[1] = l[4] = std::sqrt(0.25 - eps);
      return average_tangle(tangles_asd(AsdParams(l, 0.0)));
    };
    const double center = a_at(0.0);
    const double shifted = a_at(0.01);
    add_note(r, std::string("average tangle with ") + label + ": quarter-amplitude state is a local maximum",
             shifted <= center,
             "A = " + format_human(center) + " there, A = " + format_human(shifted) +
                 " after moving weight 0.01 into lambda0 and lambda" + std::to_string(k));
  }

  // lambda1 = 0 with lambda4 fixed.
  for (double l4 : {0.0, 0.1, 0.5}) {
    const ExtremumResult e = maximize_avg_tangle_case(AvgTangleCase::Lambda1Zero, l4, rng);
    const double expect = (4.0 / 9.0) * (1.0 - l4 * l4) * (1.0 - l4 * l4);
    const double spread = std::max(std::abs(e.argmax.lambda(0) - e.argmax.lambda(2)),
                                   std::abs(e.argmax.lambda(0) - e.argmax.lambda(3)));
    add_check(r, "average tangle with lambda1 = 0, lambda4 = " + format_human(l4) +
                     ": maximum (4/9)(1 - lambda4^2)^2 at lambda0 = lambda2 = lambda3",
              e.converged && std::abs(e.value - expect) <= 1e-8 && spread <= 1e-6,
              "A = " + format_exact(e.value) + ", expected " + format_exact(expect), describe(e.argmax));
  }

  // Symmetric family lambda1 = lambda2 = lambda3 = lambda4.
  {
    double previous = 0.0;
    bool increasing = true, below = true;
    std::string values;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      const ExtremumResult e = maximize_avg_tangle_case(AvgTangleCase::SymmetricFamily, eps, rng);
      increasing = increasing && e.value > previous;
      below = below && e.value < 1.0 / 3.0;
      previous = e.value;
      if (!values.empty()) values += ", ";
      values += "lambda0^2 = " + format_human(eps) + ": A = " + format_exact(e.value);
      if (eps == 1e-2)
        add_check(r, "symmetric family, lambda0^2 = 1/100: A = 0.3333", std::abs(e.value - 0.3333) <= 1e-4,
                  "A = " + format_exact(e.value) + " at " + describe(e.argmax), describe(e.argmax));
    }
    add_check(r, "symmetric family: A < 1/3 and increasing as lambda0 -> 0", increasing && below, values);

    const ExtremumResult free = maximize_avg_tangle_fixed_lambda0(1e-2, rng);
    add_note(r, "all-nonzero pattern with lambda0^2 = 1/100: sup of A stays at or below 1/3",
             free.value <= 1.0 / 3.0 + 1e-9,
             "sup A = " + format_exact(free.value) + " near " + describe(free.argmax));
  }
  return r;
}

}  // namespace tangle
