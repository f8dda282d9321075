#pragma once

#include "nilcoh/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace nilcoh {

// Ordered list of formal symbols assumed, together with 1, to be linearly
// independent over Q. The independence is a documented contract of the
// caller, not something the library can check.
class IrrationalBasis {
public:
  IrrationalBasis() = default;
  explicit IrrationalBasis(std::vector<std::string> symbols);

  const std::vector<std::string>& symbols() const { return symbols_; }
  bool contains(const std::string& name) const;
  std::size_t size() const { return symbols_.size(); }

  bool operator==(const IrrationalBasis&) const = default;

private:
  std::vector<std::string> symbols_;
};

// Exact element of R/Z written as a rational plus a rational combination of
// formal irrational symbols; t here stands for the circle value e^{2*pi*i*t}.
// Canonical form: rational part in [0,1), no zero symbol coefficients.
// Symbol coefficients are deliberately not reduced mod 1: the symbols are
// irrational, so integrality forces the coefficients themselves to vanish.
class CircleExponent {
public:
  CircleExponent() = default;  // zero
  CircleExponent(Rat rational);
  CircleExponent(Rat rational, std::map<std::string, Rat> irrational);

  static CircleExponent symbol(const std::string& name, Rat coeff = Rat(1));

  const Rat& rational_part() const { return rational_; }
  const std::map<std::string, Rat>& irrational_parts() const { return irrational_; }

  bool is_integral() const { return rational_ == 0 && irrational_.empty(); }
  bool operator==(const CircleExponent&) const = default;

  std::string str() const;  // "1/6", "1/3 + 2*alpha - 1/2*beta", ...

private:
  void canonicalize();

  Rat rational_;
  std::map<std::string, Rat> irrational_;
};

CircleExponent exp_add(const CircleExponent& x, const CircleExponent& y);
CircleExponent exp_neg(const CircleExponent& x);
CircleExponent exp_sub(const CircleExponent& x, const CircleExponent& y);
CircleExponent exp_scale(const Int& k, const CircleExponent& x);

}  // namespace nilcoh
