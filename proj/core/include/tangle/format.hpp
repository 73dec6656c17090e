#pragma once

#include <string>

#include "tangle/state.hpp"

namespace tangle {

/// Locale-independent %g-style text with `digits` significant digits.
std::string format_number(double x, int digits);

/// Machine (17 digits) and human (6 digits) precision.
inline std::string format_exact(double x) { return format_number(x, 17); }
inline std::string format_human(double x) { return format_number(x, 6); }

/// "lambda=(l0, l1, l2, l3, l4) phi=..." at 17 significant digits.
std::string describe(const AsdParams& p);

/// "c=[(re,im), ...]" at 17 significant digits.
std::string describe(const Amplitudes& s);

}  // namespace tangle
