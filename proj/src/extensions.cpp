#include "nilcoh/extensions.hpp"

#include "nilcoh/intmat.hpp"
#include "nilcoh/simplicity.hpp"

#include <sstream>
#include <stdexcept>

namespace nilcoh {

std::vector<Int> omega(int n, const GroupElement& r, const GroupElement& s) {
  return exponent_vector(n, r, s).flattened();
}

CircleExponent omega_pairing(std::span<const Int> w, const CocycleParams& params) {
  if (w.size() != free_param_count(params.rank()))
    throw std::invalid_argument("omega vector has wrong length");
  CircleExponent acc;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (w[pos] != 0)
      acc = exp_add(acc, exp_scale(w[pos], params.free_entry(pos)));
  return acc;
}

KElement k_identity(int n) {
  return {std::vector<Int>(free_param_count(n), Int(0)), GroupElement::identity(n)};
}

KElement k_embed(const GroupElement& r) {
  return {std::vector<Int>(free_param_count(r.rank()), Int(0)), r};
}

KElement k_multiply(const KElement& x, const KElement& y) {
  if (x.body.rank() != y.body.rank())
    throw std::invalid_argument("k_multiply: rank mismatch");
  std::vector<Int> tail = omega(x.body.rank(), x.body, y.body);
  for (std::size_t i = 0; i < tail.size(); ++i)
    tail[i] += x.tail[i] + y.tail[i];
  return {std::move(tail), multiply(x.body, y.body)};
}

KElement k_inverse(const KElement& x) {
  GroupElement body_inv = inverse(x.body);
  std::vector<Int> tail = omega(x.body.rank(), x.body, body_inv);
  for (std::size_t i = 0; i < tail.size(); ++i)
    tail[i] = -x.tail[i] - tail[i];
  return {std::move(tail), std::move(body_inv)};
}

KElement k_commutator(const KElement& x, const KElement& y) {
  return k_multiply(k_multiply(k_multiply(x, y), k_inverse(x)), k_inverse(y));
}

namespace {

bool k_commutes_with(const KElement& x, const KElement& y) {
  return k_multiply(x, y) == k_multiply(y, x);
}

std::string tail_str(const KElement& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < x.tail.size(); ++i) {
    if (i) out << ",";
    out << x.tail[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

Report kn_class3_battery(int n) {
  Report report;
  report.title = n == 2 ? "K(2) presentation check against G(3,2)"
                        : "K(" + std::to_string(n) +
                              ") class-3 battery (conjecture check: K(n) = G(3,n) "
                              "is only proven for n = 2)";
  const std::size_t d = free_param_count(n);

  std::vector<KElement> gens;
  for (int i = 1; i <= n; ++i)
    gens.push_back(k_embed(u_gen(n, i)));

  // derived letters: products of generators only, nothing injected by hand
  std::vector<std::vector<KElement>> vhat(n + 1, std::vector<KElement>(n + 1, k_identity(n)));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      vhat[j][k] = k_commutator(gens[j - 1], gens[k - 1]);

  // weight-3 commutators w_{i,(j,k)} = [u_i, [u_j, u_k]]
  std::vector<KElement> weight3;
  std::vector<std::string> weight3_names;
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 1; i <= k; ++i) {
        weight3.push_back(k_commutator(gens[i - 1], vhat[j][k]));
        weight3_names.push_back("w(" + std::to_string(i) + ",(" + std::to_string(j) +
                                "," + std::to_string(k) + "))");
      }

  // the weight-3 elements must be central: trivial body, commuting with all
  for (std::size_t w = 0; w < weight3.size(); ++w) {
    bool central = weight3[w].body.is_identity();
    for (const auto& g : gens)
      central = central && k_commutes_with(weight3[w], g);
    for (int j = 1; j <= n && central; ++j)
      for (int k = j + 1; k <= n && central; ++k)
        central = central && k_commutes_with(weight3[w], vhat[j][k]);
    report.add(weight3_names[w] + " central", central, tail_str(weight3[w]));
  }

  // class 3: all weight-4 commutators of generators vanish
  bool class3 = true;
  for (int a = 1; a <= n && class3; ++a)
    for (int b = 1; b <= n && class3; ++b)
      for (int c = 1; c <= n && class3; ++c)
        for (int e = 1; e <= n && class3; ++e) {
          KElement w4 = k_commutator(
              k_commutator(k_commutator(gens[a - 1], gens[b - 1]), gens[c - 1]),
              gens[e - 1]);
          class3 = w4 == k_identity(n);
        }
  report.add("all weight-4 commutators vanish", class3);

  // kernel generation: the weight-3 tails must span Z^d
  std::vector<std::vector<Int>> tails;
  bool bodies_trivial = true;
  for (const auto& w : weight3) {
    bodies_trivial = bodies_trivial && w.body.is_identity();
    tails.push_back(w.tail);
  }
  LatticeBasis span(d, tails);
  report.add("weight-3 tails generate the Z^" + std::to_string(d) + " kernel",
             bodies_trivial && span == LatticeBasis::full(d),
             "rank " + std::to_string(span.rank()));
  return report;
}

Report verify_k2_is_g32() {
  // specialization of the battery to the presentation
  // [u1,u2]=v, [u1,v]=w1, [u2,v]=w2, w1 w2 central, which is G(3,2)
  Report report = kn_class3_battery(2);

  // the tails of w1, w2 must form a Z^2 basis, certified by determinant +-1
  KElement u1 = k_embed(u_gen(2, 1));
  KElement u2 = k_embed(u_gen(2, 2));
  KElement v = k_commutator(u1, u2);
  KElement w1 = k_commutator(u1, v);
  KElement w2 = k_commutator(u2, v);
  IntegerMatrix tails(2, 2);
  for (int c = 0; c < 2; ++c) {
    tails.at(0, c) = w1.tail[c];
    tails.at(1, c) = w2.tail[c];
  }
  Int det = tails.determinant();
  report.add("tails of w1, w2 form a Z^2 basis", det == 1 || det == -1,
             "det = " + det.str());
  return report;
}

DeltaVector lreg_apply(const CocycleParams& params, const GroupElement& r,
                       const DeltaVector& v) {
  return {exp_add(v.scale, sigma_eval(params, r, v.point)), multiply(r, v.point)};
}

DeltaVector lreg_apply_inverse(const CocycleParams& params, const GroupElement& r,
                               const DeltaVector& v) {
  // lambda(r)^{-1} = conj(sigma(r, r^{-1})) * lambda(r^{-1})
  GroupElement r_inv = inverse(r);
  CircleExponent scale = exp_add(
      v.scale, exp_sub(sigma_eval(params, r_inv, v.point), sigma_eval(params, r, r_inv)));
  return {std::move(scale), multiply(r_inv, v.point)};
}

DeltaVector lreg_commutator(const CocycleParams& params, const GroupElement& a,
                            const GroupElement& b, const DeltaVector& v) {
  DeltaVector out = lreg_apply_inverse(params, b, v);
  out = lreg_apply_inverse(params, a, out);
  out = lreg_apply(params, b, out);
  out = lreg_apply(params, a, out);
  return out;
}

Report check_universal_relations(const CocycleParams& params,
                                 const std::vector<GroupElement>& test_points) {
  const int n = params.rank();
  Report report;
  report.title = "universal relations for C*(G(" + std::to_string(n) + "),sigma)";
  ParamMatrix t_full = param_matrix(params);

  bool uu = true, uv = true, vv = true;
  for (const GroupElement& x : test_points) {
    if (x.rank() != n)
      throw std::invalid_argument("test point rank mismatch");
    DeltaVector dx{CircleExponent(), x};
    // [U_j, U_k] delta_x = V_{jk} delta_x
    for (int k = 2; k <= n && uu; ++k)
      for (int j = 1; j < k && uu; ++j)
        uu = lreg_commutator(params, u_gen(n, j), u_gen(n, k), dx) ==
             lreg_apply(params, v_gen(n, j, k), dx);
    // [U_i, V_{jk}] delta_x = lambda_{i,jk} delta_x
    for (int i = 1; i <= n && uv; ++i)
      for (int k = 2; k <= n && uv; ++k)
        for (int j = 1; j < k && uv; ++j) {
          DeltaVector expected{exp_add(dx.scale, t_full.at(i, j, k)), x};
          uv = lreg_commutator(params, u_gen(n, i), v_gen(n, j, k), dx) == expected;
        }
    // [V_{jk}, V_{lm}] delta_x = delta_x
    for (std::size_t p = 0; p < central_dim(n) && vv; ++p)
      for (std::size_t q = 0; q < central_dim(n) && vv; ++q) {
        auto [j, k] = pair_at(p);
        auto [l, m] = pair_at(q);
        vv = lreg_commutator(params, v_gen(n, j, k), v_gen(n, l, m), dx) == dx;
      }
  }
  report.add("[U_j,U_k] acts as V_jk", uu,
             std::to_string(test_points.size()) + " points");
  report.add("[U_i,V_jk] acts as the scalar t_{i,jk}", uv);
  report.add("[V_jk,V_lm] acts trivially", vv);

  // triple dependency among the extracted scalars: mu_{j,ik} = mu_{i,jk} mu_{k,ij}
  bool triple = true;
  DeltaVector de{CircleExponent(), GroupElement::identity(n)};
  for (int k = 3; k <= n && triple; ++k)
    for (int j = 2; j < k && triple; ++j)
      for (int i = 1; i < j && triple; ++i) {
        auto scalar = [&](int a, int b, int c) {
          DeltaVector out =
              lreg_commutator(params, u_gen(n, a), v_gen(n, b, c), de);
          if (!(out.point == de.point))
            throw std::logic_error("commutator with a central element moved a point");
          return out.scale;
        };
        triple = scalar(j, i, k) == exp_add(scalar(i, j, k), scalar(k, i, j));
      }
  report.add("triple dependency mu_{j,ik} = mu_{i,jk} mu_{k,ij}", triple);
  return report;
}

}  // namespace nilcoh
