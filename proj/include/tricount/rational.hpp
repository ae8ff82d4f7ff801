#pragma once

#include <cstdint>
#include <string>

namespace tricount {

// Exact probability num/den, used wherever a sampling rate must be
// reproducible without float drift.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  constexpr double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

// Accepts "a/b", a decimal like "0.25", or a bare integer. The result is
// reduced by gcd. Throws std::invalid_argument on malformed input, zero
// denominator, or a value outside [0, 1].
Rational parse_probability(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace tricount
