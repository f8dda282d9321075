#pragma once

#include "nilcoh/numeric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nilcoh {

class IntegerMatrix {
public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  std::vector<Int> apply(std::span<const Int> x) const;  // M x

  Int determinant() const;        // Bareiss fraction-free elimination; square only
  bool is_unimodular() const;     // square with determinant +-1
  IntegerMatrix inverse_unimodular() const;

  bool operator==(const IntegerMatrix&) const = default;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithNormalForm {
  IntegerMatrix U, D, V;
};
SmithNormalForm smith_normal_form(const IntegerMatrix& M);

// H = U * M with U unimodular, H in row Hermite normal form: pivots positive,
// strictly increasing pivot columns, entries above each pivot reduced into
// [0, pivot), zero rows at the bottom.
struct HermiteNormalForm {
  IntegerMatrix H, U;
};
HermiteNormalForm hermite_normal_form(const IntegerMatrix& M);

// Z-basis of a sublattice of Z^dim, stored as the rows of its Hermite normal
// form (zero rows dropped), which makes the representation canonical.
class LatticeBasis {
public:
  explicit LatticeBasis(std::size_t dim) : dim_(dim) {}
  LatticeBasis(std::size_t dim, std::vector<std::vector<Int>> generators);

  static LatticeBasis full(std::size_t dim);   // Z^dim
  static LatticeBasis zero(std::size_t dim) { return LatticeBasis(dim); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Int>>& rows() const { return rows_; }

  bool contains(std::span<const Int> x) const;
  bool is_sublattice_of(const LatticeBasis& other) const;

  bool operator==(const LatticeBasis&) const = default;

private:
  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;
};

// Z-basis of {x in Z^cols : M x = 0}.
LatticeBasis integer_kernel(const IntegerMatrix& M);

// Z-basis of {x in Z^cols : N x lies in denominator * Z^rows}, i.e. the
// preimage of Z^rows under the rational matrix N / denominator.
LatticeBasis lattice_preimage(const IntegerMatrix& numerators, const Int& denominator);

}  // namespace nilcoh
