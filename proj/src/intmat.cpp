#include "nilcoh/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilcoh {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("matrix data size does not match dimensions");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.at(c, r) = at(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(r, k);
      if (a == 0)
        continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        out.at(r, c) += a * other.at(k, c);
    }
  return out;
}

std::vector<Int> IntegerMatrix::apply(std::span<const Int> x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Int> out(rows_, Int(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] += at(r, c) * x[c];
  return out;
}

Int IntegerMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntegerMatrix a(*this);
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool IntegerMatrix::is_unimodular() const {
  if (rows_ != cols_)
    return false;
  Int d = determinant();
  return d == 1 || d == -1;
}

IntegerMatrix IntegerMatrix::inverse_unimodular() const {
  // the row HNF of a unimodular matrix is the identity, so H = U*M = I
  if (!is_unimodular())
    throw std::invalid_argument("matrix is not unimodular");
  HermiteNormalForm h = hermite_normal_form(*this);
  return h.U;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m.at(dst, c) -= q * m.at(src, c);
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0)
    return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    m.at(r, dst) -= q * m.at(r, src);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m.at(r, c) = -m.at(r, c);
}

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& M) {
  SmithNormalForm out{IntegerMatrix::identity(M.rows()), M,
                      IntegerMatrix::identity(M.cols())};
  IntegerMatrix& D = out.D;
  const std::size_t bound = std::min(M.rows(), M.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    for (;;) {
      // pivot: smallest nonzero absolute value in the trailing submatrix
      std::size_t pr = t, pc = t;
      bool found = false;
      for (std::size_t r = t; r < D.rows(); ++r)
        for (std::size_t c = t; c < D.cols(); ++c) {
          if (D.at(r, c) == 0)
            continue;
          if (!found || abs(D.at(r, c)) < abs(D.at(pr, pc))) {
            pr = r;
            pc = c;
            found = true;
          }
        }
      if (!found) {
        // trailing submatrix is zero; done with the whole matrix
        for (std::size_t i = t; i < bound; ++i)
          if (D.at(i, i) < 0) {
            negate_row(D, i);
            negate_row(out.U, i);
          }
        return out;
      }
      swap_rows(D, t, pr);
      swap_rows(out.U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(out.V, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < D.rows(); ++r) {
        Int q = D.at(r, t) / D.at(t, t);
        row_axpy(D, r, t, q);
        row_axpy(out.U, r, t, q);
        if (D.at(r, t) != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < D.cols(); ++c) {
        Int q = D.at(t, c) / D.at(t, t);
        col_axpy(D, c, t, q);
        col_axpy(out.V, c, t, q);
        if (D.at(t, c) != 0)
          clean = false;
      }
      if (!clean)
        continue;  // remainders became new, smaller candidates

      // enforce the divisibility chain: fold any non-multiple into row t
      bool divides_all = true;
      for (std::size_t r = t + 1; r < D.rows() && divides_all; ++r)
        for (std::size_t c = t + 1; c < D.cols() && divides_all; ++c)
          if (D.at(r, c) % D.at(t, t) != 0) {
            row_axpy(D, t, r, Int(-1));
            row_axpy(out.U, t, r, Int(-1));
            divides_all = false;
          }
      if (divides_all)
        break;
    }
    if (D.at(t, t) < 0) {
      negate_row(D, t);
      negate_row(out.U, t);
    }
  }
  return out;
}

HermiteNormalForm hermite_normal_form(const IntegerMatrix& M) {
  HermiteNormalForm out{M, IntegerMatrix::identity(M.rows())};
  IntegerMatrix& H = out.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
    // gcd-reduce column c below row r until one nonzero entry remains
    for (;;) {
      std::size_t pivot = H.rows();
      for (std::size_t i = r; i < H.rows(); ++i)
        if (H.at(i, c) != 0 && (pivot == H.rows() || abs(H.at(i, c)) < abs(H.at(pivot, c))))
          pivot = i;
      if (pivot == H.rows())
        break;  // column is zero from row r down
      swap_rows(H, r, pivot);
      swap_rows(out.U, r, pivot);
      bool clean = true;
      for (std::size_t i = r + 1; i < H.rows(); ++i) {
        Int q = H.at(i, c) / H.at(r, c);
        row_axpy(H, i, r, q);
        row_axpy(out.U, i, r, q);
        if (H.at(i, c) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (r < H.rows() && H.at(r, c) != 0) {
      if (H.at(r, c) < 0) {
        negate_row(H, r);
        negate_row(out.U, r);
      }
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(H.at(i, c), H.at(r, c));
        row_axpy(H, i, r, q);
        row_axpy(out.U, i, r, q);
      }
      ++r;
    }
  }
  return out;
}

LatticeBasis::LatticeBasis(std::size_t dim, std::vector<std::vector<Int>> generators)
    : dim_(dim) {
  IntegerMatrix gen(generators.size(), dim);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (generators[r].size() != dim)
      throw std::invalid_argument("lattice generator has wrong dimension");
    for (std::size_t c = 0; c < dim; ++c)
      gen.at(r, c) = generators[r][c];
  }
  IntegerMatrix h = hermite_normal_form(gen).H;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::vector<Int> row(dim);
    bool zero = true;
    for (std::size_t c = 0; c < dim; ++c) {
      row[c] = h.at(r, c);
      if (row[c] != 0)
        zero = false;
    }
    if (!zero)
      rows_.push_back(std::move(row));
  }
}

LatticeBasis LatticeBasis::full(std::size_t dim) {
  std::vector<std::vector<Int>> gens(dim, std::vector<Int>(dim, Int(0)));
  for (std::size_t i = 0; i < dim; ++i)
    gens[i][i] = 1;
  return LatticeBasis(dim, std::move(gens));
}

bool LatticeBasis::contains(std::span<const Int> x) const {
  if (x.size() != dim_)
    throw std::invalid_argument("lattice membership: wrong dimension");
  // rows are in echelon form, so solve by forward elimination
  std::vector<Int> rem(x.begin(), x.end());
  for (const auto& row : rows_) {
    std::size_t p = 0;
    while (p < dim_ && row[p] == 0)
      ++p;
    // only this row can consume the pivot coordinate
    if (rem[p] % row[p] != 0)
      return false;
    Int q = rem[p] / row[p];
    for (std::size_t c = p; c < dim_; ++c)
      rem[c] -= q * row[c];
  }
  for (const Int& v : rem)
    if (v != 0)
      return false;
  return true;
}

bool LatticeBasis::is_sublattice_of(const LatticeBasis& other) const {
  for (const auto& row : rows_)
    if (!other.contains(row))
      return false;
  return true;
}

LatticeBasis integer_kernel(const IntegerMatrix& M) {
  SmithNormalForm snf = smith_normal_form(M);
  const std::size_t bound = std::min(M.rows(), M.cols());
  std::vector<std::vector<Int>> gens;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    if (c < bound && snf.D.at(c, c) != 0)
      continue;
    std::vector<Int> col(M.cols());
    for (std::size_t r = 0; r < M.cols(); ++r)
      col[r] = snf.V.at(r, c);
    gens.push_back(std::move(col));
  }
  return LatticeBasis(M.cols(), std::move(gens));
}

LatticeBasis lattice_preimage(const IntegerMatrix& numerators, const Int& denominator) {
  if (denominator <= 0)
    throw std::invalid_argument("lattice_preimage: denominator must be positive");
  const std::size_t p = numerators.rows();
  const std::size_t q = numerators.cols();
  // kernel of [N | -d*I] projects bijectively onto {x : N x in d Z^p}
  IntegerMatrix stacked(p, q + p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < q; ++c)
      stacked.at(r, c) = numerators.at(r, c);
    stacked.at(r, q + r) = -denominator;
  }
  LatticeBasis kernel = integer_kernel(stacked);
  std::vector<std::vector<Int>> gens;
  for (const auto& row : kernel.rows())
    gens.emplace_back(row.begin(), row.begin() + q);
  return LatticeBasis(q, std::move(gens));
}

}  // namespace nilcoh
