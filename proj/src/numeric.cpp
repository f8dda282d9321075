#include "nilcoh/numeric.hpp"

namespace nilcoh {

Int parse_int(const std::string& text) {
  if (text.empty())
    throw InputError("empty integer literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size())
    throw InputError("bad integer literal: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw InputError("bad integer literal: '" + text + "'");
  return Int(text);
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw InputError("zero denominator in rational '" + text + "'");
  return Rat(num, den);
}

std::string rat_str(const Rat& q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string rat_str_wire(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace nilcoh
