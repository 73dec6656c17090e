#include "tangle/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace tangle {

std::string format_number(double x, int digits) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, digits);
  if (res.ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), res.ptr);
}

std::string describe(const AsdParams& p) {
  std::string out = "lambda=(";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ", ";
    out += format_exact(p.lambda(i));
  }
  out += ") phi=" + format_exact(p.phi());
  return out;
}

std::string describe(const Amplitudes& s) {
  std::string out = "c=[";
  for (std::size_t i = 0; i < Amplitudes::kSize; ++i) {
    if (i) out += ", ";
    out += "(" + format_exact(s[i].real()) + "," + format_exact(s[i].imag()) + ")";
  }
  return out + "]";
}

}  // namespace tangle
