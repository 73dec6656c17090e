#pragma once

#include <array>
#include <complex>

namespace tangle {

using ComplexLD = std::complex<long double>;

/// Roots of x^2 + b x + c, computed without cancellation.
std::array<ComplexLD, 2> solve_monic_quadratic(ComplexLD b, ComplexLD c);

/// Roots of x^3 + b x^2 + c x + d (Cardano). An exact zero constant term is
/// deflated to a root at the origin.
std::array<ComplexLD, 3> solve_monic_cubic(ComplexLD b, ComplexLD c, ComplexLD d);

/// Roots of x^4 + b x^3 + c x^2 + d x + e by Ferrari's resolvent cubic,
/// each root polished with `newton_steps` Newton iterations on the quartic.
/// Exact zero trailing coefficients are deflated to roots at the origin.
std::array<ComplexLD, 4> solve_monic_quartic(ComplexLD b, ComplexLD c, ComplexLD d, ComplexLD e,
                                             int newton_steps = 2);

}  // namespace tangle
