#pragma once

#include "nilcoh/cocycle.hpp"
#include "nilcoh/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilcoh {

// The n x n(n-1)/2 matrix T with t_{i,jk} in row i, column (j,k) (global
// colex column order), derived entries materialized.
class ParamMatrix {
public:
  ParamMatrix(int n, std::vector<CircleExponent> entries);

  int rank() const { return n_; }
  std::size_t cols() const { return central_dim(n_); }
  const CircleExponent& at(int i, std::size_t col) const;     // i is 1-based
  const CircleExponent& at(int i, int j, int k) const;

  // (T s)_i for a central coordinate vector s of length n(n-1)/2.
  std::vector<CircleExponent> apply(std::span<const Int> s) const;

private:
  int n_;
  std::vector<CircleExponent> entries_;  // row-major
};

ParamMatrix param_matrix(const CocycleParams& params);

// S(G(n)): the sigma-regular central elements, as a sublattice of the
// central coordinate lattice Z^{n(n-1)/2}.
struct RegularCentralSubgroup {
  int n;
  LatticeBasis lattice;

  std::size_t rank() const { return lattice.rank(); }
};

RegularCentralSubgroup regular_central_subgroup(const CocycleParams& params);

// Machine-checkable outcome of the simplicity decision. The not_simple
// branch carries an explicit witness; the simple branch carries the Smith
// normal form of the stacked symbol-coefficient matrix, whose full column
// rank forces S(G(n)) = {0}.
struct SimplicityCertificate {
  int n = 0;
  bool simple = false;
  LatticeBasis s_basis{0};
  std::vector<Int> witness;  // nonzero central vector with T s integral; empty iff simple

  // proof transcript
  std::vector<std::string> symbol_order;
  IntegerMatrix symbol_matrix;   // stacked per-symbol coefficient matrices, cleared
  SmithNormalForm symbol_snf;
  LatticeBasis symbol_kernel{0};
  IntegerMatrix preimage_numerators;  // denominator * T_rat * K, on the kernel coords
  Int preimage_denominator = 1;

  std::size_t center_rank() const { return s_basis.rank(); }
};

SimplicityCertificate is_simple(const CocycleParams& params);

// True iff the central element s is sigma-regular. Decided by pairing s
// against the generators u_1..u_n and cross-checked against integrality of
// (T s)_i; a disagreement would be a library defect and throws.
bool verify_witness(const CocycleParams& params, const GroupElement& s);

// Re-derives the certificate's claims from the parameters: SNF transcript
// identities, witness regularity, basis canonicality. Returns false and an
// explanation on the first failed check.
bool recheck_certificate(const CocycleParams& params, const SimplicityCertificate& cert,
                         std::string* why = nullptr);

}  // namespace nilcoh
