#include "tangle/cli/input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

#include "tangle/presets.hpp"

namespace tangle::cli {

namespace {

using nlohmann::json;

double parse_decimal(std::string_view text, std::string_view field) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw InputError(std::string(field) + ": cannot parse \"" + std::string(text) + "\" as a number");
  return value;
}

double real_from_json(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get_ref<const std::string&>(), field);
  throw InputError(field + ": expected a number or a fraction string");
}

Amplitudes parse_amplitudes(const json& arr, bool normalize) {
  if (!arr.is_array() || arr.size() != Amplitudes::kSize)
    throw InputError("amplitudes: expected an array of 8 [re, im] pairs");
  Amplitudes::Storage raw;
  for (std::size_t i = 0; i < Amplitudes::kSize; ++i) {
    const std::string name = "amplitudes[" + std::to_string(i) + "]";
    const json& pair = arr[i];
    if (!pair.is_array() || pair.size() != 2) throw InputError(name + ": expected [re, im]");
    raw[i] = {real_from_json(pair[0], name + "[0]"), real_from_json(pair[1], name + "[1]")};
    if (!std::isfinite(raw[i].real()) || !std::isfinite(raw[i].imag()))
      throw InputError(name + ": not finite");
  }
  try {
    return normalize ? tangle::normalize(raw) : Amplitudes(raw);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) +
                     (normalize ? "" : " (pass --normalize to rescale)"));
  }
}

AsdParams parse_asd(const json& obj, bool normalize) {
  if (!obj.is_object()) throw InputError("asd: expected an object {\"lambda\": [...], \"phi\": ...}");
  for (const auto& item : obj.items())
    if (item.key() != "lambda" && item.key() != "phi")
      throw InputError("asd." + item.key() + ": unknown field");
  if (!obj.contains("lambda")) throw InputError("asd.lambda: missing");
  const json& arr = obj.at("lambda");
  if (!arr.is_array() || arr.size() != 5) throw InputError("asd.lambda: expected 5 magnitudes");

  std::array<double, 5> lambda;
  double total = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::string name = "asd.lambda[" + std::to_string(i) + "]";
    lambda[i] = real_from_json(arr[i], name);
    if (!std::isfinite(lambda[i]) || lambda[i] < 0.0) throw InputError(name + ": must be finite and >= 0");
    total += lambda[i] * lambda[i];
  }
  const double phi = obj.contains("phi") ? real_from_json(obj.at("phi"), "asd.phi") : 0.0;
  if (!std::isfinite(phi)) throw InputError("asd.phi: not finite");

  if (normalize) {
    if (!(total > 0.0)) throw InputError("asd.lambda: all zero, cannot normalize");
    const double scale = 1.0 / std::sqrt(total);
    for (double& l : lambda) l *= scale;
  } else if (std::abs(total - 1.0) > kNormTol) {
    throw InputError("asd.lambda: sum of squares is " + std::to_string(total) +
                     ", not 1 (pass --normalize to rescale)");
  }
  return AsdParams(lambda, phi);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

double parse_real(std::string_view text, std::string_view field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, field);
  const double num = parse_decimal(text.substr(0, slash), field);
  const double den = parse_decimal(text.substr(slash + 1), field);
  if (den == 0.0) throw InputError(std::string(field) + ": zero denominator in \"" + std::string(text) + "\"");
  return num / den;
}

bool is_preset_name(std::string_view name) {
  for (std::string_view fixed : {"ghz", "w", "G", "kappa", "vartheta"})
    if (name == fixed) return true;
  return name.starts_with("omega:") || name.starts_with("varkappa:");
}

StateInput preset_state(std::string_view name) {
  if (name == "ghz") return presets::ghz();
  if (name == "w") return presets::w();
  if (name == "G") return presets::g();
  if (name == "kappa") return presets::kappa();
  if (name == "vartheta") return presets::vartheta();

  const auto colon = name.find(':');
  const std::string_view family = name.substr(0, colon);
  if (colon != std::string_view::npos && (family == "omega" || family == "varkappa")) {
    const std::string field = "preset " + std::string(family);
    const double x = parse_real(name.substr(colon + 1), field);
    try {
      return family == "omega" ? presets::omega(x) : presets::varkappa(x);
    } catch (const std::exception& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  throw InputError("preset: unknown name \"" + std::string(name) +
                   "\" (expected ghz, w, G, kappa, vartheta, omega:<l4>, varkappa:<l2>)");
}

StateInput parse_state_json(std::string_view text, bool normalize) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("input: expected a JSON object");

  int present = 0;
  for (const char* key : {"amplitudes", "asd", "preset"}) present += doc.contains(key) ? 1 : 0;
  for (const auto& item : doc.items())
    if (item.key() != "amplitudes" && item.key() != "asd" && item.key() != "preset")
      throw InputError(item.key() + ": unknown field");
  if (present != 1) throw InputError("input: exactly one of \"amplitudes\", \"asd\", \"preset\" is required");

  if (doc.contains("amplitudes")) return parse_amplitudes(doc.at("amplitudes"), normalize);
  if (doc.contains("asd")) return parse_asd(doc.at("asd"), normalize);
  const json& p = doc.at("preset");
  if (!p.is_string()) throw InputError("preset: expected a string");
  return preset_state(p.get_ref<const std::string&>());
}

StateInput load_state(const std::string& source, bool normalize) {
  if (is_preset_name(source)) return preset_state(source);
  if (source == "-") return parse_state_json(read_all(std::cin), normalize);
  std::ifstream file(source, std::ios::binary);
  if (!file) throw InputError("input: cannot open \"" + source + "\"");
  return parse_state_json(read_all(file), normalize);
}

}  // namespace tangle::cli
