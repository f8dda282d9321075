#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/report.hpp"

#include <vector>

namespace nilcoh {

// Dual 2-cocycle: the integer exponent vector of the canonical multiplier
// formula, flattened in the canonical parameter order. Pairing it with any
// parameter tuple reproduces sigma_eval.
std::vector<Int> omega(int n, const GroupElement& r, const GroupElement& s);

CircleExponent omega_pairing(std::span<const Int> w, const CocycleParams& params);

// Element of K(n) = Z^d x_omega G(n), d = (n+1)n(n-1)/3.
struct KElement {
  std::vector<Int> tail;
  GroupElement body;

  bool operator==(const KElement&) const = default;
};

KElement k_identity(int n);
KElement k_embed(const GroupElement& r);  // (0, r)
KElement k_multiply(const KElement& x, const KElement& y);
KElement k_inverse(const KElement& x);
KElement k_commutator(const KElement& x, const KElement& y);

// Checks the presentation-level evidence for K(2) being the free nilpotent
// group of class 3 and rank 2: class-3 vanishing, centrality of the triple
// commutators, and that their tails generate the Z^2 kernel.
Report verify_k2_is_g32();

// The same battery for arbitrary rank. For n >= 3 the isomorphism with the
// free class-3 group is only conjectural, and the report says so.
Report kn_class3_battery(int n);

// Scalar multiple of a basis vector of l^2(G(n)): e^{2*pi*i*scale} * delta_point.
struct DeltaVector {
  CircleExponent scale;
  GroupElement point;

  bool operator==(const DeltaVector&) const = default;
};

// Left regular sigma-projective representation on basis vectors:
// lambda(r) (c, x) = (c + sigma(r,x), r x), and the action of lambda(r)^{-1}.
DeltaVector lreg_apply(const CocycleParams& params, const GroupElement& r,
                       const DeltaVector& v);
DeltaVector lreg_apply_inverse(const CocycleParams& params, const GroupElement& r,
                               const DeltaVector& v);

// [lambda(a), lambda(b)] applied to v, i.e. a b a^{-1} b^{-1} as operators.
DeltaVector lreg_commutator(const CocycleParams& params, const GroupElement& a,
                            const GroupElement& b, const DeltaVector& v);

// Verifies the universal relations of the twisted algebra on each test
// point: [U_j,U_k] acts as V_{jk}, [U_i,V_{jk}] as the scalar t_{i,jk},
// [V_{jk},V_{lm}] as the identity, plus the triple dependency among the
// extracted commutator scalars.
Report check_universal_relations(const CocycleParams& params,
                                 const std::vector<GroupElement>& test_points);

}  // namespace nilcoh
