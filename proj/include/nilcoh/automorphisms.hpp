#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/intmat.hpp"
#include "nilcoh/rng.hpp"

namespace nilcoh {

// Endomorphism of G(n) described by the images of the generators u_i:
// row i of A holds the base coordinates of phi(u_i), row i of S its central
// coordinates. It is an automorphism exactly when A is unimodular.
class Automorphism {
public:
  Automorphism(IntegerMatrix a, IntegerMatrix s);

  static Automorphism identity(int n);

  int rank() const { return n_; }
  const IntegerMatrix& matrix() const { return a_; }
  const IntegerMatrix& central_parts() const { return s_; }

  GroupElement image_of_u(int i) const;  // phi(u_i), 1-based
  GroupElement image_of_v(int j, int k) const;

  bool is_automorphism() const { return a_.is_unimodular(); }
  void require_automorphism() const;

  bool operator==(const Automorphism&) const = default;

private:
  int n_;
  IntegerMatrix a_, s_;
};

GroupElement apply(const Automorphism& phi, const GroupElement& r);

// apply(compose(phi, psi), r) == apply(phi, apply(psi, r))
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
Automorphism inverse(const Automorphism& phi);

// Conjugation by s as an automorphism; central s gives the identity.
Automorphism inner_from(const GroupElement& s);

// Matrix of 2x2 minors: row pair (i,j), column pair (k,l), both colex,
// entry a_{ik} a_{jl} - a_{il} a_{jk}. Mediates the action on the center:
// the image of v_{jk} has central coordinates given by row (j,k).
IntegerMatrix minor_matrix(const IntegerMatrix& a);

// Parameters of sigma_phi for phi the straight lift of A (central parts 0).
// Frozen convention, fixed against extract_params of the pullback oracle:
// the full parameter matrix maps as T -> A * T * minor_matrix(A)^t.
CocycleParams act_on_params(const IntegerMatrix& a, const CocycleParams& params);

// extract_params of (r,s) -> sigma(phi(r), phi(s)).
CocycleParams pullback(const Automorphism& phi, const CocycleParams& params);

// Random element of GL(n,Z) built from elementary transvections and
// signed permutations; entries stay small for the given number of steps.
IntegerMatrix random_unimodular(int n, SplitMix64& rng, int steps = 12);

}  // namespace nilcoh
