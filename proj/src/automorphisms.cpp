#include "nilcoh/automorphisms.hpp"

#include "nilcoh/simplicity.hpp"

#include <stdexcept>
#include <utility>

namespace nilcoh {

Automorphism::Automorphism(IntegerMatrix a, IntegerMatrix s)
    : n_(static_cast<int>(a.rows())), a_(std::move(a)), s_(std::move(s)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0)
    throw std::invalid_argument("automorphism matrix must be square and nonempty");
  if (s_.rows() != a_.rows() || s_.cols() != central_dim(n_))
    throw std::invalid_argument("central-part matrix has wrong shape");
}

Automorphism Automorphism::identity(int n) {
  return Automorphism(IntegerMatrix::identity(n), IntegerMatrix(n, central_dim(n)));
}

GroupElement Automorphism::image_of_u(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("generator index out of range");
  std::vector<Int> coords(n_ + central_dim(n_));
  for (int c = 0; c < n_; ++c)
    coords[c] = a_.at(i - 1, c);
  for (std::size_t c = 0; c < central_dim(n_); ++c)
    coords[n_ + c] = s_.at(i - 1, c);
  return GroupElement(n_, std::move(coords));
}

GroupElement Automorphism::image_of_v(int j, int k) const {
  return commutator(image_of_u(j), image_of_u(k));
}

void Automorphism::require_automorphism() const {
  if (!is_automorphism())
    throw std::invalid_argument(
        "matrix is not unimodular: an endomorphism, not an automorphism");
}

GroupElement apply(const Automorphism& phi, const GroupElement& r) {
  if (phi.rank() != r.rank())
    throw std::invalid_argument("apply: rank mismatch");
  const int n = r.rank();
  GroupElement acc = GroupElement::identity(n);
  // letters of the normal form map to powers of the generator images
  for (std::size_t c = 0; c < central_dim(n); ++c) {
    const Int& e = r.coords()[n + c];
    if (e == 0)
      continue;
    auto [j, k] = pair_at(c);
    acc = multiply(acc, power(phi.image_of_v(j, k), e));
  }
  for (int i = n; i >= 1; --i)
    if (r.base(i) != 0)
      acc = multiply(acc, power(phi.image_of_u(i), r.base(i)));
  return acc;
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank() != psi.rank())
    throw std::invalid_argument("compose: rank mismatch");
  phi.require_automorphism();
  psi.require_automorphism();
  const int n = phi.rank();
  IntegerMatrix a(n, n), s(n, central_dim(n));
  for (int i = 1; i <= n; ++i) {
    GroupElement image = apply(phi, psi.image_of_u(i));
    for (int c = 0; c < n; ++c)
      a.at(i - 1, c) = image.coords()[c];
    for (std::size_t c = 0; c < central_dim(n); ++c)
      s.at(i - 1, c) = image.coords()[n + c];
  }
  return Automorphism(std::move(a), std::move(s));
}

Automorphism inverse(const Automorphism& phi) {
  phi.require_automorphism();
  const int n = phi.rank();
  IntegerMatrix a_inv = phi.matrix().inverse_unimodular();
  // phi(row i of a_inv as a u-word) is u_i times a central defect; cancel the
  // defect by solving for the central parts of the preimages of the u_i
  Automorphism straight(a_inv, IntegerMatrix(n, central_dim(n)));
  IntegerMatrix minors_t = minor_matrix(phi.matrix()).transposed();
  IntegerMatrix minors_t_inv = minors_t.inverse_unimodular();
  IntegerMatrix s(n, central_dim(n));
  for (int i = 1; i <= n; ++i) {
    GroupElement defect = apply(phi, straight.image_of_u(i));
    std::vector<Int> w(central_dim(n));
    for (std::size_t c = 0; c < central_dim(n); ++c)
      w[c] = -defect.coords()[n + c];
    std::vector<Int> correction = minors_t_inv.apply(w);
    for (std::size_t c = 0; c < central_dim(n); ++c)
      s.at(i - 1, c) = correction[c];
  }
  return Automorphism(std::move(a_inv), std::move(s));
}

Automorphism inner_from(const GroupElement& s) {
  const int n = s.rank();
  IntegerMatrix central(n, central_dim(n));
  for (int i = 1; i <= n; ++i) {
    GroupElement image = conjugate(s, u_gen(n, i));
    for (std::size_t c = 0; c < central_dim(n); ++c)
      central.at(i - 1, c) = image.coords()[n + c];
  }
  return Automorphism(IntegerMatrix::identity(n), std::move(central));
}

IntegerMatrix minor_matrix(const IntegerMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("minor matrix needs a square input");
  const int n = static_cast<int>(a.rows());
  const std::size_t m = central_dim(n);
  IntegerMatrix out(m, m);
  for (std::size_t row = 0; row < m; ++row) {
    auto [i, j] = pair_at(row);
    for (std::size_t col = 0; col < m; ++col) {
      auto [k, l] = pair_at(col);
      out.at(row, col) = a.at(i - 1, k - 1) * a.at(j - 1, l - 1) -
                         a.at(i - 1, l - 1) * a.at(j - 1, k - 1);
    }
  }
  return out;
}

CocycleParams act_on_params(const IntegerMatrix& a, const CocycleParams& params) {
  if (a.rows() != static_cast<std::size_t>(params.rank()))
    throw std::invalid_argument("act_on_params: rank mismatch");
  if (!a.is_unimodular())
    throw std::invalid_argument("act_on_params: matrix is not unimodular");
  const int n = params.rank();
  ParamMatrix t = param_matrix(params);
  IntegerMatrix minors = minor_matrix(a);

  CocycleParams out(n, params.basis());
  for (const FreeIndex& idx : free_param_indices(n)) {
    const std::size_t col = pair_index(idx.j, idx.k);
    CircleExponent acc;
    for (int row = 1; row <= n; ++row) {
      const Int& weight_a = a.at(idx.i - 1, row - 1);
      if (weight_a == 0)
        continue;
      for (std::size_t c = 0; c < central_dim(n); ++c) {
        const Int& weight_m = minors.at(col, c);
        if (weight_m == 0)
          continue;
        acc = exp_add(acc, exp_scale(weight_a * weight_m, t.at(row, c)));
      }
    }
    out.set(idx.i, idx.j, idx.k, acc);
  }
  return out;
}

CocycleParams pullback(const Automorphism& phi, const CocycleParams& params) {
  phi.require_automorphism();
  return extract_params(params.rank(), params.basis(),
                        [&](const GroupElement& r, const GroupElement& s) {
                          return sigma_eval(params, apply(phi, r), apply(phi, s));
                        });
}

IntegerMatrix random_unimodular(int n, SplitMix64& rng, int steps) {
  IntegerMatrix a = IntegerMatrix::identity(n);
  if (n == 1) {
    if (rng.flip())
      a.at(0, 0) = -1;
    return a;
  }
  for (int s = 0; s < steps; ++s) {
    switch (rng.uniform(0, 2)) {
      case 0: {  // transvection: row i += +-1 * row j
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 2));
        if (j >= i)
          ++j;
        Int sign(rng.flip() ? 1 : -1);
        for (int c = 0; c < n; ++c)
          a.at(i, c) += sign * a.at(j, c);
        break;
      }
      case 1: {  // swap two rows
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 2));
        if (j >= i)
          ++j;
        for (int c = 0; c < n; ++c)
          std::swap(a.at(i, c), a.at(j, c));
        break;
      }
      default: {  // negate a row
        int i = static_cast<int>(rng.uniform(0, n - 1));
        for (int c = 0; c < n; ++c)
          a.at(i, c) = -a.at(i, c);
        break;
      }
    }
  }
  return a;
}

}  // namespace nilcoh
