#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nilcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Raised when user-supplied input (files, CLI arguments) is malformed.
/// The CLI maps this to exit code 2, library misuse to exit code 1.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// x(x-1)/2; exact for negative x as well, e.g. binom2(-1) = 1.
inline Int binom2(const Int& x) { return x * (x - 1) / 2; }

// Division rounding toward -inf (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Int rat_floor(const Rat& q) {
  return floor_div(numerator(q), denominator(q));
}

// Representative of q mod 1 in [0, 1).
inline Rat mod1(const Rat& q) { return q - Rat(rat_floor(q)); }

Int parse_int(const std::string& text);

// Accepts "p/q" or plain "p"; the result is kept in lowest terms by cpp_rational.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

// Always "p/q", the wire format used in JSON files.
std::string rat_str_wire(const Rat& q);

}  // namespace nilcoh
