#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tangle/classify.hpp"
#include "tangle/closed_form.hpp"
#include "tangle/oracle.hpp"
#include "tangle/presets.hpp"

using namespace tangle;

TEST_CASE("SLOCC labels of reference states") {
  CHECK(slocc_class_asd(presets::ghz()).label == SloccClass::GHZ);
  CHECK(slocc_class_asd(presets::w()).label == SloccClass::W);
  CHECK(slocc_class_asd(presets::kappa()).label == SloccClass::GHZ);
  CHECK(slocc_class_asd(AsdParams({1, 0, 0, 0, 0}, 0)).label == SloccClass::A_B_C);
  // |0>_A (x) Bell_BC: lambda1 = 0 branch with lambda0 lambda4 = 0.
  CHECK(slocc_class_asd(AsdParams({0, std::sqrt(0.5), 0, 0, std::sqrt(0.5)}, 0)).label == SloccClass::A_BC);
  // (|000> + |101>)/sqrt 2 = |0>_B (x) Bell_AC
  CHECK(slocc_class_asd(AsdParams({std::sqrt(0.5), 0, std::sqrt(0.5), 0, 0}, 0)).label == SloccClass::B_AC);
  CHECK(slocc_class_asd(AsdParams({std::sqrt(0.5), 0, 0, std::sqrt(0.5), 0}, 0)).label == SloccClass::C_AB);
  CHECK(to_string(SloccClass::A_BC) == "A-BC");
}

TEST_CASE("property: GHZ label iff positive three-tangle") {
  Rng rng(61);
  for (int k = 0; k < 500; ++k) {
    std::array<double, 5> l = random_asd(rng).lambdas();
    if (k % 3 == 0) l[4] = 0.0;
    if (k % 5 == 0) l[0] = 0.0;
    double n = 0.0;
    for (double x : l) n += x * x;
    if (n == 0.0) continue;
    for (double& x : l) x /= std::sqrt(n);
    const AsdParams p(l, 1.0);
    const bool ghz = slocc_class_asd(p).label == SloccClass::GHZ;
    CHECK(ghz == (three_tangle(asd_to_amplitudes(p)) > 1e-12));
  }
}

TEST_CASE("W class pairwise tangles") {
  Rng rng(67);
  for (int k = 0; k < 100; ++k) {
    auto l = random_asd(rng).lambdas();
    l[1] = l[4] = 0.0;
    const double n = std::sqrt(l[0] * l[0] + l[2] * l[2] + l[3] * l[3]);
    for (double& x : l) x /= n;
    const TangleSet t = tangles_closed_form(asd_to_amplitudes(AsdParams(l, 0.0)));
    CHECK(t.abc <= 1e-12);
    CHECK(std::abs(t.ab - 4 * l[0] * l[0] * l[3] * l[3]) <= 1e-12);
    CHECK(std::abs(t.ac - 4 * l[0] * l[0] * l[2] * l[2]) <= 1e-12);
    CHECK(std::abs(t.bc - 4 * l[2] * l[2] * l[3] * l[3]) <= 1e-12);
  }
}

TEST_CASE("vanishing profiles") {
  const VanishingProfile ghz = vanishing_profile(presets::ghz());
  CHECK(ghz.matched == VanishingCase::AllVanish);
  CHECK(ghz.lambda_criterion);
  CHECK(vanishing_profile(presets::kappa()).matched == VanishingCase::NoneVanish);

  const double h = 0.5;
  CHECK(vanishing_profile(AsdParams({h, h, h, 0, h}, 0)).matched == VanishingCase::OnlyAB);
  CHECK(vanishing_profile(AsdParams({h, h, 0, h, h}, 0)).matched == VanishingCase::OnlyAC);
  const double f = 1.0 / std::sqrt(5.0);
  CHECK(vanishing_profile(AsdParams({f, f, f, f, f}, 0)).matched == VanishingCase::OnlyBC);
  CHECK(vanishing_profile(AsdParams({f, f, f, f, f}, 1.0)).matched == VanishingCase::NoneVanish);
  const double t = 1.0 / std::sqrt(3.0);
  CHECK(vanishing_profile(AsdParams({t, t, 0, 0, t}, 0)).matched == VanishingCase::AbAndAc);
  CHECK(vanishing_profile(AsdParams({t, 0, t, 0, t}, 0)).matched == VanishingCase::AbAndBc);
  CHECK(vanishing_profile(AsdParams({t, 0, 0, t, t}, 0)).matched == VanishingCase::AcAndBc);

  CHECK_THROWS_AS(vanishing_profile(presets::w()), std::invalid_argument);
}

TEST_CASE("property: vanishing profile agrees with the oracle") {
  Rng rng(71);
  for (int k = 0; k < 300; ++k) {
    auto l = random_asd(rng).lambdas();
    for (int i = 1; i < 4; ++i)
      if ((k >> i) & 1) l[i] = 0.0;
    double n = 0.0;
    for (double x : l) n += x * x;
    for (double& x : l) x /= std::sqrt(n);
    const AsdParams p(l, k % 2 ? 0.0 : 2.0);
    const VanishingProfile v = vanishing_profile(p);
    const TangleSet o = measures_oracle(asd_to_amplitudes(p)).tangles;
    CHECK(v.zero_ab == (o.ab <= kZeroTol));
    CHECK(v.zero_ac == (o.ac <= kZeroTol));
    CHECK(v.zero_bc == (o.bc <= kZeroTol));
    CHECK(v.lambda_criterion);
  }
}

TEST_CASE("non-vanishing forms") {
  CHECK(nonvanishing_form(presets::kappa()).form == NonvanishingKind::Varpi1);
  CHECK(nonvanishing_form(presets::ghz()).form == NonvanishingKind::None);
  const AsdParams v2({0.4, 0.3, 0.5, 0.4, std::sqrt(1 - 0.16 - 0.09 - 0.25 - 0.16)}, 0.0);
  CHECK(nonvanishing_form(v2).form == NonvanishingKind::Varpi2);
  const AsdParams v3({0.4, 0.3, 0.5, 0.4, std::sqrt(1 - 0.16 - 0.09 - 0.25 - 0.16)}, std::numbers::pi / 3);
  CHECK(nonvanishing_form(v3).form == NonvanishingKind::Varpi3);
}

TEST_CASE("reconstruction from tangles") {
  const Reconstruction k = reconstruct_from_tangles(4.0 / 9, 4.0 / 9, 0.25);
  CHECK(!k.w_class);
  CHECK(k.params.lambda(0) == doctest::Approx(2.0 / 3));
  CHECK(k.params.lambda(2) == doctest::Approx(0.5));
  CHECK(k.params.lambda(3) == doctest::Approx(0.5));
  CHECK(k.params.lambda(4) == doctest::Approx(std::sqrt(2.0) / 6));

  const Reconstruction w = reconstruct_from_tangles(4.0 / 9, 4.0 / 9, 4.0 / 9);
  CHECK(w.w_class);
  CHECK(w.params.lambda(4) == 0.0);
  CHECK(w.params.lambda(0) == doctest::Approx(1 / std::sqrt(3.0)));

  CHECK_THROWS_AS(reconstruct_from_tangles(0.6, 0.6, 0.6), std::domain_error);
  CHECK_THROWS_AS(reconstruct_from_tangles(0.0, 0.1, 0.1), std::invalid_argument);
  // Near the boundary the sign of lambda4^2 decides: here 1 - 3 sqrt(0.44) / 2 > 0.
  const Reconstruction near = reconstruct_from_tangles(0.44, 0.44, 0.44);
  CHECK(!near.w_class);
  CHECK(near.params.lambda(4) == doctest::Approx(std::sqrt(1 - 1.5 * std::sqrt(0.44))));
}

TEST_CASE("property: reconstruction inverts the tangles of varpi1 states") {
  Rng rng(73);
  for (int k = 0; k < 200; ++k) {
    auto l = random_asd(rng).lambdas();
    l[1] = 0.0;
    double n = 0.0;
    for (double x : l) n += x * x;
    for (double& x : l) x /= std::sqrt(n);
    const AsdParams p(l, 0.0);
    const TangleSet t = tangles_asd(p);
    const Reconstruction r = reconstruct_from_tangles(t.ab, t.ac, t.bc);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(r.params.lambda(i) - l[i]) < 1e-8);
  }
}

TEST_CASE("J4 relation on varpi1 states") {
  for (const AsdParams& p : {presets::kappa(), presets::g()}) {
    const InvariantSet j = invariants_asd(p);
    CHECK(std::abs(j4_from_j123(j.j1, j.j2, j.j3) - j.j4) <= 1e-10);
  }
  Rng rng(79);
  for (int k = 0; k < 100; ++k) {
    auto l = random_asd(rng).lambdas();
    l[1] = 0.0;
    double n = 0.0;
    for (double x : l) n += x * x;
    for (double& x : l) x /= std::sqrt(n);
    const InvariantSet j = invariants_asd(AsdParams(l, 0.0));
    CHECK(std::abs(j4_from_j123(j.j1, j.j2, j.j3) - j.j4) <= 1e-10);
  }
  CHECK_THROWS(j4_from_j123(0.0, 0.1, 0.1));
}

TEST_CASE("GHZ uniqueness witness") {
  CHECK(ghz_uniqueness_witness(presets::ghz()));
  CHECK_FALSE(ghz_uniqueness_witness(presets::w()));
  CHECK_FALSE(ghz_uniqueness_witness(presets::g()));
}
