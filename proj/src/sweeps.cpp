#include "nilcoh/sweeps.hpp"

#include "nilcoh/extensions.hpp"

#include <string>

namespace nilcoh {

GroupElement random_element(int n, SplitMix64& rng, long long bound) {
  std::vector<Int> coords(n + central_dim(n));
  for (auto& c : coords)
    c = rng.uniform(-bound, bound);
  return GroupElement(n, std::move(coords));
}

GroupElement random_central(int n, SplitMix64& rng, long long bound) {
  std::vector<Int> coords(n + central_dim(n), Int(0));
  for (std::size_t c = n; c < coords.size(); ++c)
    coords[c] = rng.uniform(-bound, bound);
  return GroupElement(n, std::move(coords));
}

Rat random_rational(SplitMix64& rng, long long max_den) {
  long long den = rng.uniform(1, max_den);
  long long num = rng.uniform(0, den - 1);
  return Rat(num, den);
}

CocycleParams random_rational_params(int n, SplitMix64& rng, long long max_den) {
  CocycleParams params(n, IrrationalBasis{});
  for (const FreeIndex& idx : free_param_indices(n))
    params.set(idx.i, idx.j, idx.k, CircleExponent(random_rational(rng, max_den)));
  return params;
}

CocycleParams random_symbolic_params(int n, const IrrationalBasis& basis,
                                     SplitMix64& rng, long long max_den) {
  CocycleParams params(n, basis);
  for (const FreeIndex& idx : free_param_indices(n)) {
    CircleExponent value(random_rational(rng, max_den));
    for (const auto& name : basis.symbols())
      if (rng.flip()) {
        Rat coeff = random_rational(rng, max_den);
        if (coeff == 0)
          coeff = Rat(1);
        value = exp_add(value, CircleExponent::symbol(name, coeff));
      }
    params.set(idx.i, idx.j, idx.k, value);
  }
  return params;
}

Report cocycle_suite(const CocycleParams& params, const SweepConfig& config) {
  const int n = params.rank();
  SplitMix64 rng(config.seed);
  Report report;
  report.title = "cocycle identity sweep, n = " + std::to_string(n);

  long long sigma_fail = 0, omega_fail = 0;
  for (long long trial = 0; trial < config.trials; ++trial) {
    GroupElement r = random_element(n, rng, config.bound);
    GroupElement s = random_element(n, rng, config.bound);
    GroupElement t = random_element(n, rng, config.bound);
    if (!cocycle_identity_holds(params, r, s, t))
      ++sigma_fail;
    // Z^d-valued identity certifies every parameter tuple at once
    std::vector<Int> lhs = omega(n, r, s);
    std::vector<Int> rhs = omega(n, r, multiply(s, t));
    std::vector<Int> lhs2 = omega(n, multiply(r, s), t);
    std::vector<Int> rhs2 = omega(n, s, t);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (lhs[i] + lhs2[i] != rhs[i] + rhs2[i]) {
        ++omega_fail;
        break;
      }
  }
  report.add("sigma(r,s)sigma(rs,t) = sigma(r,st)sigma(s,t)", sigma_fail == 0,
             std::to_string(config.trials) + " triples, " +
                 std::to_string(sigma_fail) + " failures");
  report.add("omega(r,s)+omega(rs,t) = omega(r,st)+omega(s,t)", omega_fail == 0,
             std::to_string(config.trials) + " triples, " +
                 std::to_string(omega_fail) + " failures");
  return report;
}

Report relations_suite(const CocycleParams& params, const SweepConfig& config) {
  SplitMix64 rng(config.seed);
  std::vector<GroupElement> points;
  points.reserve(config.trials);
  for (long long trial = 0; trial < config.trials; ++trial)
    points.push_back(random_element(params.rank(), rng, config.bound));
  return check_universal_relations(params, points);
}

Report kgroup_suite(const CocycleParams& params, const SweepConfig& config) {
  const int n = params.rank();
  SplitMix64 rng(config.seed);
  Report report;
  report.title = "K(" + std::to_string(n) + ") sanity battery";

  long long assoc_fail = 0, inverse_fail = 0, identity_fail = 0, proj_fail = 0;
  const KElement e = k_identity(n);
  for (long long trial = 0; trial < config.trials; ++trial) {
    KElement x{omega(n, random_element(n, rng, config.bound),
                     random_element(n, rng, config.bound)),
               random_element(n, rng, config.bound)};
    KElement y = k_embed(random_element(n, rng, config.bound));
    KElement z = k_embed(random_element(n, rng, config.bound));
    if (!(k_multiply(k_multiply(x, y), z) == k_multiply(x, k_multiply(y, z))))
      ++assoc_fail;
    if (!(k_multiply(x, k_inverse(x)) == e && k_multiply(k_inverse(x), x) == e))
      ++inverse_fail;
    if (!(k_multiply(e, x) == x && k_multiply(x, e) == x))
      ++identity_fail;

    // projectivity: lambda(r) lambda(s) = sigma(r,s) lambda(rs) on delta_x
    GroupElement r = random_element(n, rng, config.bound);
    GroupElement s = random_element(n, rng, config.bound);
    DeltaVector dx{CircleExponent(), random_element(n, rng, config.bound)};
    DeltaVector lhs = lreg_apply(params, r, lreg_apply(params, s, dx));
    DeltaVector rhs = lreg_apply(params, multiply(r, s), dx);
    rhs.scale = exp_add(rhs.scale, sigma_eval(params, r, s));
    if (!(lhs == rhs))
      ++proj_fail;
  }
  auto detail = [&](long long fails) {
    return std::to_string(config.trials) + " trials, " + std::to_string(fails) +
           " failures";
  };
  report.add("associativity", assoc_fail == 0, detail(assoc_fail));
  report.add("inverses", inverse_fail == 0, detail(inverse_fail));
  report.add("identity", identity_fail == 0, detail(identity_fail));
  report.add("left regular representation is sigma-projective", proj_fail == 0,
             detail(proj_fail));
  return report;
}

}  // namespace nilcoh
