#pragma once

#include "nilcoh/group.hpp"
#include "nilcoh/scalars.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace nilcoh {

// Number of free multiplier parameters for rank n: (n+1)n(n-1)/3.
std::size_t free_param_count(int n);

// Free parameter index t_{i,(j,k)} with 1 <= i <= k and 1 <= j < k <= n.
// Indices with i > k are "derived": they never carry their own value but
// expand as t_{i,jk} = t_{k,ji} - t_{j,ki} (for j < k < i).
struct FreeIndex {
  int i, j, k;
  bool operator==(const FreeIndex&) const = default;
};

// Canonical enumeration: pairs (j,k) in colex order, then i = 1..k.
std::vector<FreeIndex> free_param_indices(int n);
std::size_t free_param_position(int n, int i, int j, int k);
bool is_free_index(int n, int i, int j, int k);

// Integer exponent vector over the free parameter indices. Accumulating onto
// a derived index folds it into free ones first.
class ExponentVector {
public:
  explicit ExponentVector(int n) : n_(n) {}

  int rank() const { return n_; }
  const std::map<std::size_t, Int>& entries() const { return entries_; }

  void add(int i, int j, int k, const Int& weight);
  Int at(int i, int j, int k) const;  // free indices only

  std::vector<Int> flattened() const;  // dense, canonical parameter order

  ExponentVector& operator+=(const ExponentVector& other);
  bool operator==(const ExponentVector&) const = default;

private:
  int n_;
  std::map<std::size_t, Int> entries_;  // position -> weight, zeros dropped
};

// The free parameter family {t_{i,jk}} determining a multiplier of G(n).
class CocycleParams {
public:
  CocycleParams(int n, IrrationalBasis basis);

  int rank() const { return n_; }
  const IrrationalBasis& basis() const { return basis_; }

  const CircleExponent& free_entry(std::size_t position) const;
  const CircleExponent& free_entry(int i, int j, int k) const;
  void set(int i, int j, int k, CircleExponent value);  // free indices only

  // t_{i,jk} for any 1 <= i <= n, expanding derived indices.
  CircleExponent entry(int i, int j, int k) const;

  bool operator==(const CocycleParams&) const = default;

private:
  int n_;
  IrrationalBasis basis_;
  std::vector<CircleExponent> free_;
};

// Exponents of the canonical multiplier formula: sigma(r,s) = prod over free
// indices of lambda_{i,jk}^{e_{i,jk}(r,s)} with the e given by this vector.
ExponentVector exponent_vector(int n, const GroupElement& r, const GroupElement& s);

// sigma(r,s) as a circle exponent; the multiplier value is e^{2*pi*i*result}.
CircleExponent sigma_eval(const CocycleParams& params, const GroupElement& r,
                          const GroupElement& s);

bool cocycle_identity_holds(const CocycleParams& params, const GroupElement& r,
                            const GroupElement& s, const GroupElement& t);

// sigma(r,s) - sigma(s,r) mod 1; the commutation obstruction.
CircleExponent pairing(const CocycleParams& params, const GroupElement& r,
                       const GroupElement& s);

using CocycleOracle =
    std::function<CircleExponent(const GroupElement&, const GroupElement&)>;

// Reads the parameters of a normalized 2-cocycle off its values on pairs
// (u_i, v_{jk}); for cocycles of the canonical form this is an exact inverse
// of sigma_eval, and in general it lands in the same similarity class.
CocycleParams extract_params(int n, const IrrationalBasis& basis,
                             const CocycleOracle& oracle);

// Similarity classes biject with parameter tuples, so equality of all free
// entries decides similarity.
bool similar_to(const CocycleParams& p, const CocycleParams& q);

// The rank-2 (Heisenberg) multiplier formula, written out verbatim as an
// independent cross-check of sigma_eval at n = 2.
CircleExponent g2_sigma(const CircleExponent& t1, const CircleExponent& t2,
                        const GroupElement& r, const GroupElement& s);

}  // namespace nilcoh
