#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/group.hpp"
#include "nilcoh/scalars.hpp"

#include <initializer_list>
#include <vector>

namespace nilcoh::testing {

inline GroupElement el(int n, std::initializer_list<long long> coords) {
  std::vector<Int> v;
  v.reserve(coords.size());
  for (long long c : coords)
    v.emplace_back(c);
  return GroupElement(n, std::move(v));
}

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline CircleExponent exp_rat(long long num, long long den = 1) {
  return CircleExponent(rat(num, den));
}

// the two-parameter Heisenberg cocycle (t_{1,12}, t_{2,12})
inline CocycleParams g2_params(const CircleExponent& t1, const CircleExponent& t2,
                               IrrationalBasis basis = IrrationalBasis{}) {
  CocycleParams params(2, std::move(basis));
  params.set(1, 1, 2, t1);
  params.set(2, 1, 2, t2);
  return params;
}

}  // namespace nilcoh::testing
