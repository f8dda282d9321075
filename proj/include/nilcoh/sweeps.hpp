#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/report.hpp"
#include "nilcoh/rng.hpp"

#include <cstdint>

namespace nilcoh {

// Seeded generators for the randomized sweeps. All draws go through
// SplitMix64 so a (seed, trials, bound) triple pins the whole run.

GroupElement random_element(int n, SplitMix64& rng, long long bound);
GroupElement random_central(int n, SplitMix64& rng, long long bound);
Rat random_rational(SplitMix64& rng, long long max_den);

// Rational parameters with denominators up to max_den on every free entry.
CocycleParams random_rational_params(int n, SplitMix64& rng, long long max_den);

// Like the above but each entry also picks up a random rational multiple of
// each basis symbol with probability ~1/2.
CocycleParams random_symbolic_params(int n, const IrrationalBasis& basis,
                                     SplitMix64& rng, long long max_den);

struct SweepConfig {
  std::uint64_t seed = 0;
  long long trials = 1000;
  long long bound = 5;
};

// sigma(r,s)sigma(rs,t) = sigma(r,st)sigma(s,t) on seeded triples, plus the
// Z^d-valued identity for omega on the same triples.
Report cocycle_suite(const CocycleParams& params, const SweepConfig& config);

// Universal relations battery on seeded test points.
Report relations_suite(const CocycleParams& params, const SweepConfig& config);

// K(n) group axioms, omega cocycle identity, and projectivity of the left
// regular representation.
Report kgroup_suite(const CocycleParams& params, const SweepConfig& config);

}  // namespace nilcoh
