#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangle/optimize.hpp"
#include "tangle/state.hpp"

namespace tangle {

// CKW case inequalities -----------------------------------------------------

/// One of the eight zero patterns of (lambda1, lambda2, lambda3) in the GHZ
/// class, with the claimed bound on tau_AB + tau_AC + tau_BC.
struct CkwCase {
  int id = 0;
  std::string_view pattern;
  double bound = 0.0;
  bool strict = false;
};

/// Cases 1..8 in order.
const std::array<CkwCase, 8>& ckw_cases();

struct CkwCheck {
  CkwCase ckw;
  double sum = 0.0;
  bool satisfied = false;
};

/// Throws std::invalid_argument unless lambda0 lambda4 > kZeroTol.
CkwCheck ckw_case_check(const AsdParams& p);

/// Random GHZ-class state whose (lambda1, lambda2, lambda3) follow case `id`.
AsdParams sample_ckw_case(int id, Rng& rng);

// Extremum searches ---------------------------------------------------------

struct ExtremumResult {
  AsdParams argmax;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  double kkt_residual = 0.0;
};

/// Average entropy m of lambda0|000> + lambda2|101> + lambda3|110> as a
/// problem on the unit sphere of (lambda0, lambda2, lambda3).
SphereProblem w_class_entropy_problem();

/// The three pairwise differences of the Lagrange stationarity conditions
/// for m on the W class; all vanish at an interior extremum.
std::array<double, 3> w_class_stationarity(const AsdParams& p);

/// Best of `starts` seeded projected-gradient ascents of m over the W class.
ExtremumResult maximize_avg_entropy_w_class(Rng& rng, int starts = 20);
ExtremumResult maximize_avg_entropy_w_class();

/// Zero patterns for maximising the average tangle A in the GHZ class.
enum class AvgTangleCase {
  Lambda2Zero,      ///< lambda2 = 0, lambda1 lambda3 != 0
  Lambda3Zero,      ///< lambda3 = 0, lambda1 lambda2 != 0
  Lambda1Zero,      ///< lambda1 = 0 with lambda4 held at `parameter`
  SymmetricFamily,  ///< lambda1 = ... = lambda4 with lambda0^2 = `parameter`; phi optimised
};

ExtremumResult maximize_avg_tangle_case(AvgTangleCase c, double parameter, Rng& rng,
                                        int starts = 20);

/// sup over phi and lambda1..lambda4 >= 0 of A with lambda0^2 fixed.
ExtremumResult maximize_avg_tangle_fixed_lambda0(double lambda0_sq, Rng& rng, int starts = 20);

/// Maximum of tau_AB + tau_AC + tau_BC over the zero pattern of CKW case
/// `id` (phi chosen to maximise tau_BC).
ExtremumResult maximize_ckw_sum(int id, Rng& rng, int starts = 20);

// Suites --------------------------------------------------------------------

struct ClaimCheck {
  std::string claim;
  bool asserted = true;  ///< false: reported only
  bool passed = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<ClaimCheck> checks;
  /// First state that broke an asserted claim.
  std::optional<std::string> counterexample;

  bool passed() const;
};

/// max |S'(alpha) - 2| over [alpha_lo, 1/4).
double entropy_slope_gap(double alpha_lo);

SuiteReport proposition_suite(std::size_t n_samples, Rng& rng);
SuiteReport averages_relation_suite(std::size_t n_samples, Rng& rng);
SuiteReport monogamy_suite(std::size_t n_samples, Rng& rng);
SuiteReport ckw_suite(std::size_t n_samples, Rng& rng);
SuiteReport extrema_suite(Rng& rng);

}  // namespace tangle
