#include "nilcoh/cocycle.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace nilcoh {

std::size_t free_param_count(int n) {
  return static_cast<std::size_t>(n + 1) * n * (n - 1) / 3;
}

std::vector<FreeIndex> free_param_indices(int n) {
  std::vector<FreeIndex> out;
  out.reserve(free_param_count(n));
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 1; i <= k; ++i)
        out.push_back({i, j, k});
  return out;
}

bool is_free_index(int n, int i, int j, int k) {
  return 1 <= j && j < k && k <= n && 1 <= i && i <= k;
}

std::size_t free_param_position(int n, int i, int j, int k) {
  if (!is_free_index(n, i, j, k))
    throw std::invalid_argument("not a free parameter index: (" + std::to_string(i) +
                                ",(" + std::to_string(j) + "," + std::to_string(k) +
                                "))");
  // pairs (j',k') colex-before (j,k) contribute k' slots each
  std::size_t offset = 0;
  for (int kk = 2; kk < k; ++kk)
    offset += static_cast<std::size_t>(kk) * (kk - 1);
  offset += static_cast<std::size_t>(j - 1) * k;
  return offset + (i - 1);
}

void ExponentVector::add(int i, int j, int k, const Int& weight) {
  if (weight == 0)
    return;
  if (!(1 <= j && j < k && k <= n_ && 1 <= i && i <= n_))
    throw std::invalid_argument("exponent index out of range");
  if (i > k) {
    // t_{i,jk} = t_{k,ji} - t_{j,ki} for j < k < i
    add(k, j, i, weight);
    add(j, k, i, -weight);
    return;
  }
  std::size_t pos = free_param_position(n_, i, j, k);
  Int& slot = entries_[pos];
  slot += weight;
  if (slot == 0)
    entries_.erase(pos);
}

Int ExponentVector::at(int i, int j, int k) const {
  auto it = entries_.find(free_param_position(n_, i, j, k));
  return it == entries_.end() ? Int(0) : it->second;
}

std::vector<Int> ExponentVector::flattened() const {
  std::vector<Int> out(free_param_count(n_), Int(0));
  for (const auto& [pos, weight] : entries_)
    out[pos] = weight;
  return out;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (n_ != other.n_)
    throw std::invalid_argument("exponent vector rank mismatch");
  for (const auto& [pos, weight] : other.entries_) {
    Int& slot = entries_[pos];
    slot += weight;
    if (slot == 0)
      entries_.erase(pos);
  }
  return *this;
}

CocycleParams::CocycleParams(int n, IrrationalBasis basis)
    : n_(n), basis_(std::move(basis)) {
  if (n < 1)
    throw std::invalid_argument("cocycle parameters need rank >= 1");
  free_.assign(free_param_count(n), CircleExponent());
}

const CircleExponent& CocycleParams::free_entry(std::size_t position) const {
  return free_.at(position);
}

const CircleExponent& CocycleParams::free_entry(int i, int j, int k) const {
  return free_[free_param_position(n_, i, j, k)];
}

void CocycleParams::set(int i, int j, int k, CircleExponent value) {
  for (const auto& [name, coeff] : value.irrational_parts())
    if (!basis_.contains(name))
      throw std::invalid_argument("parameter value uses undeclared symbol '" + name +
                                  "'");
  free_[free_param_position(n_, i, j, k)] = std::move(value);
}

CircleExponent CocycleParams::entry(int i, int j, int k) const {
  if (!(1 <= j && j < k && k <= n_ && 1 <= i && i <= n_))
    throw std::invalid_argument("parameter index out of range");
  if (i <= k)
    return free_entry(i, j, k);
  return exp_sub(free_entry(k, j, i), free_entry(j, k, i));
}

ExponentVector exponent_vector(int n, const GroupElement& r, const GroupElement& s) {
  if (r.rank() != n || s.rank() != n)
    throw std::invalid_argument("exponent_vector: rank mismatch");
  ExponentVector ev(n);
  for (int k = 2; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      const Int& sjk = s.central(j, k);
      ev.add(j, j, k, sjk * r.base(j) + binom2(r.base(j)) * s.base(k));
      ev.add(k, j, k, r.base(k) * (sjk + r.base(j) * s.base(k)) +
                          binom2(s.base(k)) * r.base(j));
      for (int i = 1; i < j; ++i) {
        // triple i < j < k
        ev.add(i, j, k, sjk * r.base(i) + s.base(k) * r.central(i, j));
        ev.add(j, i, k, s.central(i, k) * r.base(j) +
                            s.base(k) * (r.base(i) * r.base(j) - r.central(i, j)));
      }
    }
  }
  return ev;
}

CircleExponent sigma_eval(const CocycleParams& params, const GroupElement& r,
                          const GroupElement& s) {
  if (r.rank() != params.rank() || s.rank() != params.rank())
    throw std::invalid_argument("sigma_eval: rank mismatch");
  ExponentVector ev = exponent_vector(params.rank(), r, s);
  CircleExponent acc;
  for (const auto& [pos, weight] : ev.entries())
    acc = exp_add(acc, exp_scale(weight, params.free_entry(pos)));
  return acc;
}

bool cocycle_identity_holds(const CocycleParams& params, const GroupElement& r,
                            const GroupElement& s, const GroupElement& t) {
  CircleExponent lhs = exp_add(sigma_eval(params, r, s),
                               sigma_eval(params, multiply(r, s), t));
  CircleExponent rhs = exp_add(sigma_eval(params, r, multiply(s, t)),
                               sigma_eval(params, s, t));
  return lhs == rhs;
}

CircleExponent pairing(const CocycleParams& params, const GroupElement& r,
                       const GroupElement& s) {
  return exp_sub(sigma_eval(params, r, s), sigma_eval(params, s, r));
}

CocycleParams extract_params(int n, const IrrationalBasis& basis,
                             const CocycleOracle& oracle) {
  CocycleParams out(n, basis);
  for (const FreeIndex& idx : free_param_indices(n)) {
    GroupElement u = u_gen(n, idx.i);
    GroupElement v = v_gen(n, idx.j, idx.k);
    out.set(idx.i, idx.j, idx.k, exp_sub(oracle(u, v), oracle(v, u)));
  }
  return out;
}

bool similar_to(const CocycleParams& p, const CocycleParams& q) {
  if (p.rank() != q.rank())
    throw std::invalid_argument("similar_to: rank mismatch");
  if (!(p.basis() == q.basis()))
    throw std::invalid_argument("similar_to: basis mismatch");
  return p == q;
}

CircleExponent g2_sigma(const CircleExponent& t1, const CircleExponent& t2,
                        const GroupElement& r, const GroupElement& s) {
  if (r.rank() != 2 || s.rank() != 2)
    throw std::invalid_argument("g2_sigma is the rank-2 formula");
  Int e1 = s.central(1, 2) * r.base(1) + binom2(r.base(1)) * s.base(2);
  Int e2 = r.base(2) * (s.central(1, 2) + r.base(1) * s.base(2)) +
           binom2(s.base(2)) * r.base(1);
  return exp_add(exp_scale(e1, t1), exp_scale(e2, t2));
}

}  // namespace nilcoh
