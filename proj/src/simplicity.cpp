#include "nilcoh/simplicity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilcoh {

ParamMatrix::ParamMatrix(int n, std::vector<CircleExponent> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n) * central_dim(n))
    throw std::invalid_argument("parameter matrix has wrong size");
}

const CircleExponent& ParamMatrix::at(int i, std::size_t col) const {
  if (i < 1 || i > n_ || col >= cols())
    throw std::invalid_argument("parameter matrix index out of range");
  return entries_[(i - 1) * cols() + col];
}

const CircleExponent& ParamMatrix::at(int i, int j, int k) const {
  return at(i, pair_index(j, k));
}

std::vector<CircleExponent> ParamMatrix::apply(std::span<const Int> s) const {
  if (s.size() != cols())
    throw std::invalid_argument("parameter matrix application: wrong dimension");
  std::vector<CircleExponent> out(n_);
  for (int i = 1; i <= n_; ++i) {
    CircleExponent acc;
    for (std::size_t c = 0; c < cols(); ++c)
      acc = exp_add(acc, exp_scale(s[c], at(i, c)));
    out[i - 1] = acc;
  }
  return out;
}

ParamMatrix param_matrix(const CocycleParams& params) {
  const int n = params.rank();
  std::vector<CircleExponent> entries;
  entries.reserve(n * central_dim(n));
  for (int i = 1; i <= n; ++i)
    for (std::size_t c = 0; c < central_dim(n); ++c) {
      auto [j, k] = pair_at(c);
      entries.push_back(params.entry(i, j, k));
    }
  return ParamMatrix(n, std::move(entries));
}

namespace {

// Stacks, for each symbol, the n x m matrix of that symbol's coefficients in
// T, with denominators cleared. Ts integral forces these rows to kill s.
IntegerMatrix symbol_coefficient_matrix(const ParamMatrix& T,
                                        const std::vector<std::string>& symbols) {
  const std::size_t m = T.cols();
  IntegerMatrix stacked(symbols.size() * T.rank(), m);
  std::size_t row = 0;
  for (const auto& name : symbols) {
    Int clear(1);
    for (int i = 1; i <= T.rank(); ++i)
      for (std::size_t c = 0; c < m; ++c) {
        const auto& irr = T.at(i, c).irrational_parts();
        auto it = irr.find(name);
        if (it != irr.end())
          clear = lcm(clear, denominator(it->second));
      }
    for (int i = 1; i <= T.rank(); ++i, ++row)
      for (std::size_t c = 0; c < m; ++c) {
        const auto& irr = T.at(i, c).irrational_parts();
        auto it = irr.find(name);
        if (it != irr.end())
          stacked.at(row, c) = numerator(it->second) * (clear / denominator(it->second));
      }
  }
  return stacked;
}

// d * T_rat * K for the kernel basis K (columns = basis vectors), plus d.
std::pair<IntegerMatrix, Int> cleared_rational_restriction(const ParamMatrix& T,
                                                           const LatticeBasis& kernel) {
  const int n = T.rank();
  const std::size_t r = kernel.rank();
  Int d(1);
  for (int i = 1; i <= n; ++i)
    for (std::size_t c = 0; c < T.cols(); ++c)
      d = lcm(d, denominator(T.at(i, c).rational_part()));
  IntegerMatrix N(n, r);
  for (int i = 1; i <= n; ++i)
    for (std::size_t b = 0; b < r; ++b) {
      Rat acc(0);
      for (std::size_t c = 0; c < T.cols(); ++c)
        acc += T.at(i, c).rational_part() * Rat(kernel.rows()[b][c]);
      Rat scaled = acc * Rat(d);
      // d clears every entry of T_rat, hence every combination of them
      if (denominator(scaled) != 1)
        throw std::logic_error("denominator clearing failed");
      N.at(i - 1, b) = numerator(scaled);
    }
  return {std::move(N), std::move(d)};
}

std::vector<Int> max_norm_smallest_row(const LatticeBasis& basis) {
  std::vector<Int> best;
  Int best_norm(0);
  for (const auto& row : basis.rows()) {
    Int norm(0);
    for (const Int& v : row)
      if (abs(v) > norm)
        norm = abs(v);
    if (best.empty() || norm < best_norm || (norm == best_norm && row < best)) {
      best = row;
      best_norm = norm;
    }
  }
  return best;
}

}  // namespace

RegularCentralSubgroup regular_central_subgroup(const CocycleParams& params) {
  return {params.rank(), is_simple(params).s_basis};
}

SimplicityCertificate is_simple(const CocycleParams& params) {
  const int n = params.rank();
  if (n < 2)
    throw std::invalid_argument(
        "simplicity is decided for rank >= 2; G(1) = Z is abelian and its "
        "sigma-regular theory is not governed by the central lattice");
  const std::size_t m = central_dim(n);
  ParamMatrix T = param_matrix(params);

  SimplicityCertificate cert;
  cert.n = n;
  cert.symbol_order = params.basis().symbols();
  cert.symbol_matrix = symbol_coefficient_matrix(T, cert.symbol_order);
  cert.symbol_snf = smith_normal_form(cert.symbol_matrix);
  cert.symbol_kernel = integer_kernel(cert.symbol_matrix);

  // within the symbol kernel, the rational parts must land in Z^n
  auto [numerators, d] = cleared_rational_restriction(T, cert.symbol_kernel);
  cert.preimage_numerators = numerators;
  cert.preimage_denominator = d;
  LatticeBasis coeffs = lattice_preimage(numerators, d);

  std::vector<std::vector<Int>> gens;
  for (const auto& y : coeffs.rows()) {
    std::vector<Int> s(m, Int(0));
    for (std::size_t b = 0; b < cert.symbol_kernel.rank(); ++b)
      for (std::size_t c = 0; c < m; ++c)
        s[c] += y[b] * cert.symbol_kernel.rows()[b][c];
    gens.push_back(std::move(s));
  }
  cert.s_basis = LatticeBasis(m, std::move(gens));
  cert.simple = cert.s_basis.rank() == 0;
  if (!cert.simple)
    cert.witness = max_norm_smallest_row(cert.s_basis);
  return cert;
}

bool verify_witness(const CocycleParams& params, const GroupElement& s) {
  if (s.rank() != params.rank())
    throw std::invalid_argument("verify_witness: rank mismatch");
  if (!s.is_central())
    throw std::invalid_argument("verify_witness: element is not central");
  const int n = params.rank();
  bool by_pairing = true;
  for (int i = 1; i <= n && by_pairing; ++i)
    by_pairing = pairing(params, u_gen(n, i), s).is_integral();

  std::span<const Int> central(s.coords().data() + n, central_dim(n));
  bool by_matrix = true;
  for (const CircleExponent& value : param_matrix(params).apply(central))
    by_matrix = by_matrix && value.is_integral();

  if (by_pairing != by_matrix)
    throw std::logic_error("sigma-regularity criteria disagree; library defect");
  return by_pairing;
}

namespace {

bool fail(std::string* why, const std::string& message) {
  if (why)
    *why = message;
  return false;
}

GroupElement central_element(int n, std::span<const Int> central) {
  std::vector<Int> coords(n + central_dim(n), Int(0));
  std::copy(central.begin(), central.end(), coords.begin() + n);
  return GroupElement(n, std::move(coords));
}

}  // namespace

bool recheck_certificate(const CocycleParams& params, const SimplicityCertificate& cert,
                         std::string* why) {
  const int n = params.rank();
  const std::size_t m = central_dim(n);
  if (cert.n != n)
    return fail(why, "certificate rank does not match parameters");
  if (cert.symbol_order != params.basis().symbols())
    return fail(why, "certificate symbol order does not match parameters");

  // SNF transcript: U * B * V = D, transforms unimodular, diagonal chain
  const auto& snf = cert.symbol_snf;
  if (!(snf.U * cert.symbol_matrix * snf.V == snf.D))
    return fail(why, "symbol SNF identity U*B*V = D fails");
  if (!snf.U.is_unimodular() || !snf.V.is_unimodular())
    return fail(why, "symbol SNF transforms are not unimodular");
  const std::size_t bound = std::min(snf.D.rows(), snf.D.cols());
  std::size_t snf_rank = 0;
  for (std::size_t i = 0; i < bound; ++i) {
    const Int& d = snf.D.at(i, i);
    if (d < 0)
      return fail(why, "symbol SNF diagonal has negative entry");
    if (i + 1 < bound) {
      const Int& next = snf.D.at(i + 1, i + 1);
      if (d == 0 ? next != 0 : next % d != 0)
        return fail(why, "symbol SNF diagonal violates divisibility chain");
    }
    if (d != 0)
      ++snf_rank;
  }
  if (cert.symbol_kernel.rank() != cert.symbol_matrix.cols() - snf_rank)
    return fail(why, "symbol kernel rank inconsistent with SNF rank");

  // the claimed S-basis must be exactly the recomputed lattice
  SimplicityCertificate fresh = is_simple(params);
  if (!(cert.symbol_matrix == fresh.symbol_matrix))
    return fail(why, "symbol coefficient matrix does not match parameters");
  if (!(cert.s_basis == fresh.s_basis))
    return fail(why, "S(G(n)) basis does not match parameters");
  if (cert.simple != fresh.simple)
    return fail(why, "verdict does not match parameters");

  if (cert.simple) {
    if (!cert.witness.empty())
      return fail(why, "simple certificate carries a witness");
    if (snf_rank != m)
      return fail(why, "simple verdict but symbol matrix is not of full column rank");
  } else {
    if (cert.witness.size() != m)
      return fail(why, "witness has wrong dimension");
    bool nonzero = false;
    for (const Int& v : cert.witness)
      nonzero = nonzero || v != 0;
    if (!nonzero)
      return fail(why, "witness is zero");
    if (!verify_witness(params, central_element(n, cert.witness)))
      return fail(why, "witness is not sigma-regular");
    if (!cert.s_basis.contains(cert.witness))
      return fail(why, "witness does not lie in the claimed lattice");
  }

  // every claimed basis vector must itself be sigma-regular
  for (const auto& row : cert.s_basis.rows())
    if (!verify_witness(params, central_element(n, row)))
      return fail(why, "claimed S-basis vector is not sigma-regular");
  return true;
}

}  // namespace nilcoh
