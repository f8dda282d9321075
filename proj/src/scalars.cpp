#include "nilcoh/scalars.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nilcoh {

IrrationalBasis::IrrationalBasis(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& name : symbols_) {
    if (name.empty())
      throw std::invalid_argument("irrational symbol names must be nonempty");
    if (!seen.insert(name).second)
      throw std::invalid_argument("duplicate irrational symbol '" + name + "'");
  }
}

bool IrrationalBasis::contains(const std::string& name) const {
  for (const auto& s : symbols_)
    if (s == name)
      return true;
  return false;
}

CircleExponent::CircleExponent(Rat rational) : rational_(std::move(rational)) {
  canonicalize();
}

CircleExponent::CircleExponent(Rat rational, std::map<std::string, Rat> irrational)
    : rational_(std::move(rational)), irrational_(std::move(irrational)) {
  canonicalize();
}

CircleExponent CircleExponent::symbol(const std::string& name, Rat coeff) {
  return CircleExponent(Rat(0), {{name, std::move(coeff)}});
}

void CircleExponent::canonicalize() {
  rational_ = mod1(rational_);
  for (auto it = irrational_.begin(); it != irrational_.end();) {
    if (it->second == 0)
      it = irrational_.erase(it);
    else
      ++it;
  }
}

std::string CircleExponent::str() const {
  std::ostringstream out;
  out << rat_str(rational_);
  for (const auto& [name, coeff] : irrational_) {
    Rat c = coeff;
    if (c < 0) {
      out << " - ";
      c = -c;
    } else {
      out << " + ";
    }
    if (c != 1)
      out << rat_str(c) << "*";
    out << name;
  }
  return out.str();
}

CircleExponent exp_add(const CircleExponent& x, const CircleExponent& y) {
  Rat rat = x.rational_part() + y.rational_part();
  std::map<std::string, Rat> irr = x.irrational_parts();
  for (const auto& [name, coeff] : y.irrational_parts())
    irr[name] += coeff;
  return CircleExponent(std::move(rat), std::move(irr));
}

CircleExponent exp_neg(const CircleExponent& x) {
  Rat rat = -x.rational_part();
  std::map<std::string, Rat> irr;
  for (const auto& [name, coeff] : x.irrational_parts())
    irr.emplace(name, -coeff);
  return CircleExponent(std::move(rat), std::move(irr));
}

CircleExponent exp_sub(const CircleExponent& x, const CircleExponent& y) {
  return exp_add(x, exp_neg(y));
}

CircleExponent exp_scale(const Int& k, const CircleExponent& x) {
  Rat rat = Rat(k) * x.rational_part();
  std::map<std::string, Rat> irr;
  for (const auto& [name, coeff] : x.irrational_parts())
    irr.emplace(name, Rat(k) * coeff);
  return CircleExponent(std::move(rat), std::move(irr));
}

}  // namespace nilcoh
