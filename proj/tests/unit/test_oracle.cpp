#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "tangle/closed_form.hpp"
#include "tangle/oracle.hpp"
#include "tangle/presets.hpp"

using namespace tangle;

namespace {

// p |Phi+><Phi+| + (1 - p) I / 4; concurrence max(0, (3p - 1) / 2).
DensityMatrix werner(double p) {
  std::vector<Complex> m(16);
  for (int i = 0; i < 4; ++i) m[i * 5] = (1.0 - p) / 4.0;
  for (int i : {0, 3})
    for (int j : {0, 3}) m[i * 4 + j] += p / 2.0;
  return DensityMatrix::checked(4, m);
}

DensityMatrix pair(const Amplitudes& s, int x, int y) { return partial_trace(density_matrix(s), {x, y}); }

}  // namespace

TEST_CASE("characteristic polynomial of a diagonal matrix") {
  Matrix4 m{};
  for (int i = 0; i < 4; ++i) m[i * 5] = i + 1.0;
  const auto c = characteristic_polynomial(m);
  CHECK(static_cast<double>(c[0].real()) == doctest::Approx(-10));
  CHECK(static_cast<double>(c[1].real()) == doctest::Approx(35));
  CHECK(static_cast<double>(c[2].real()) == doctest::Approx(-50));
  CHECK(static_cast<double>(c[3].real()) == doctest::Approx(24));
}

TEST_CASE("spin flip is an involution and fixes the singlet") {
  Rng rng(1);
  const DensityMatrix rho = pair(random_state(rng), 0, 1);
  const auto once = spin_flip(rho);
  const Matrix4 twice = spin_flip(once.rho_bar);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(twice[i] - once.rho[i]) < 1e-16);

  // Singlet (|01> - |10>)/sqrt 2 in AB, C = |0>.
  const Amplitudes singlet = test::from_reals({0, 0, 1, 0, -1, 0, 0, 0});
  const auto s = spin_flip(pair(singlet, 0, 1));
  for (int i = 0; i < 16; ++i) CHECK(std::abs(s.rho_bar[i] - s.rho[i]) < 1e-16);
}

TEST_CASE("tangle oracle on textbook two-qubit states") {
  CHECK(tangle_oracle(pair(test::bell_ab(), 0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tangle_oracle(pair(test::product_state(), 0, 1)) == 0.0);

  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const double c = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CAPTURE(p);
    CHECK(tangle_oracle(werner(p)) == doctest::Approx(c * c).epsilon(1e-12));
  }
}

TEST_CASE("factored and characteristic-polynomial spectra agree") {
  Rng rng(19);
  const int keep[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int k = 0; k < 300; ++k) {
    const Amplitudes s = random_state(rng);
    const DensityMatrix rho = density_matrix(s);
    for (int traced = 0; traced < 3; ++traced) {
      const auto general = eta_spectrum(spin_flip(partial_trace(rho, {keep[traced][0], keep[traced][1]}))).eta;
      const auto hermitian = eta_spectrum(partial_trace(rho, {keep[traced][0], keep[traced][1]})).eta;
      const auto pure = eta_spectrum(s, traced).eta;
      for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(general[i] - pure[i]) < 1e-12);
        CHECK(std::abs(hermitian[i] - pure[i]) < 1e-12);
      }
      CHECK(pure[2] == 0.0);
      CHECK(pure[3] == 0.0);
    }
  }
}

TEST_CASE("Hermitian and characteristic-polynomial spectra agree on mixed states") {
  Rng rng(23);
  for (int k = 0; k < 300; ++k) {
    // Equal mixture of marginals of two random pure states: rank up to 4.
    const DensityMatrix r1 = pair(random_state(rng), 0, 1);
    const DensityMatrix r2 = pair(random_state(rng), 0, 2);
    std::vector<Complex> m(16);
    for (int i = 0; i < 16; ++i) m[i] = 0.5 * (r1.entries()[i] + r2.entries()[i]);
    const DensityMatrix rho = DensityMatrix::checked(4, m);
    const auto quartic = eta_spectrum(spin_flip(rho)).eta;
    const auto hermitian = eta_spectrum(rho).eta;
    for (int i = 0; i < 4; ++i) CHECK(std::abs(quartic[i] - hermitian[i]) < 1e-9);
  }
}

TEST_CASE("Werner tangle over a dense grid") {
  int worst = -1;
  double worst_err = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double p = k / 2000.0;
    const double c = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    const double err = std::abs(tangle_oracle(werner(p)) - c * c);
    if (err > worst_err) {
      worst_err = err;
      worst = k;
    }
  }
  CAPTURE(worst);
  CHECK(worst_err < 1e-12);
}

TEST_CASE("eta spectrum rejects non-physical products") {
  SpinFlippedPair rotation;
  rotation.rho[1] = -1.0;
  rotation.rho[4] = 1.0;
  for (int i = 0; i < 4; ++i) rotation.rho_bar[i * 5] = 1.0;
  CHECK_THROWS_AS(eta_spectrum(rotation), NumericalError);

  SpinFlippedPair negative;
  negative.rho[0] = -1.0;
  for (int i = 0; i < 4; ++i) negative.rho_bar[i * 5] = 1.0;
  CHECK_THROWS_AS(eta_spectrum(negative), NumericalError);

  CHECK_THROWS(eta_spectrum(test::product_state(), 3));
}

TEST_CASE("entropy oracle") {
  const DensityMatrix mixed2 = DensityMatrix::checked(2, {0.5, 0.0, 0.0, 0.5});
  CHECK(entropy_oracle(mixed2) == doctest::Approx(test::kLn2).epsilon(1e-15));
  std::vector<Complex> id4(16);
  for (int i = 0; i < 4; ++i) id4[i * 5] = 0.25;
  CHECK(entropy_oracle(DensityMatrix::checked(4, id4)) == doctest::Approx(2 * test::kLn2).epsilon(1e-14));
  CHECK(entropy_oracle(partial_trace(density_matrix(test::product_state()), {0})) == 0.0);
  CHECK_THROWS(entropy_oracle(density_matrix(test::product_state())));
}

TEST_CASE("pair and complementary single-qubit entropies coincide") {
  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    const DensityMatrix rho = density_matrix(random_state(rng));
    CHECK(entropy_oracle(partial_trace(rho, {1, 2})) ==
          doctest::Approx(entropy_oracle(partial_trace(rho, {0}))).epsilon(1e-10));
    CHECK(entropy_oracle(partial_trace(rho, {0, 1})) ==
          doctest::Approx(entropy_oracle(partial_trace(rho, {2}))).epsilon(1e-10));
  }
}

TEST_CASE("oracle reproduces the W state") {
  const MeasureReport r = measures_oracle(asd_to_amplitudes(presets::w()));
  CHECK(r.tangles.ab == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(r.tangles.ac == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(r.tangles.bc == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(std::abs(r.tangles.abc) < 1e-14);
  CHECK(r.entropies.s_a == doctest::Approx(presets::w_entropy()).epsilon(1e-14));
}

TEST_CASE("williamson trace identity") {
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    const Amplitudes s = random_state(rng);
    const TangleSet t = tangles_closed_form(s);
    const DensityMatrix rho = density_matrix(s);
    CHECK(std::abs(williamson_check(partial_trace(rho, {0, 1}), t.ab, t.abc)) < 1e-12);
    CHECK(std::abs(williamson_check(partial_trace(rho, {0, 2}), t.ac, t.abc)) < 1e-12);
    CHECK(std::abs(williamson_check(partial_trace(rho, {1, 2}), t.bc, t.abc)) < 1e-12);
  }
}
