#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tangle/state.hpp"

namespace tangle::cli {

/// Malformed or out-of-contract user input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StateInput = std::variant<Amplitudes, AsdParams>;

/// A decimal ("0.25", "-1e-3") or a fraction of two decimals ("1/3").
/// `field` names the value in error messages.
double parse_real(std::string_view text, std::string_view field);

/// Named states: ghz, w, G, kappa, vartheta, omega:<lambda4>, varkappa:<lambda2>.
bool is_preset_name(std::string_view name);
StateInput preset_state(std::string_view name);

/// One JSON document holding exactly one of
///   "amplitudes": [[re, im] x 8]
///   "asd": {"lambda": [l0, .., l4], "phi": angle}
///   "preset": "<name>"
/// Numbers may be JSON numbers or strings accepted by parse_real. With
/// `normalize` the vector (or lambda) is rescaled to unit norm first.
StateInput parse_state_json(std::string_view text, bool normalize);

/// `source` is a preset name, "-" for standard input, or a file path.
StateInput load_state(const std::string& source, bool normalize);

}  // namespace tangle::cli
