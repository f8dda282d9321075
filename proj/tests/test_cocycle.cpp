#include "nilcoh/cocycle.hpp"
#include "nilcoh/rng.hpp"
#include "nilcoh/sweeps.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace nilcoh;
using nilcoh::testing::el;
using nilcoh::testing::exp_rat;
using nilcoh::testing::g2_params;
using nilcoh::testing::rat;

namespace {

// the eight-term rank-3 formula written out longhand, as an independent oracle
CircleExponent g3_sigma(const CocycleParams& p, const GroupElement& r,
                        const GroupElement& s) {
  auto t = [&](int i, int j, int k) { return p.free_entry(i, j, k); };
  CircleExponent acc;
  auto add = [&](const CircleExponent& base, const Int& e) {
    acc = exp_add(acc, exp_scale(e, base));
  };
  add(t(1, 2, 3), s.central(2, 3) * r.base(1) + s.base(3) * r.central(1, 2));
  add(t(2, 1, 3), s.central(1, 3) * r.base(2) +
                      s.base(3) * (r.base(1) * r.base(2) - r.central(1, 2)));
  add(t(1, 1, 2), s.central(1, 2) * r.base(1) + binom2(r.base(1)) * s.base(2));
  add(t(2, 1, 2), r.base(2) * (s.central(1, 2) + r.base(1) * s.base(2)) +
                      binom2(s.base(2)) * r.base(1));
  add(t(1, 1, 3), s.central(1, 3) * r.base(1) + binom2(r.base(1)) * s.base(3));
  add(t(3, 1, 3), r.base(3) * (s.central(1, 3) + r.base(1) * s.base(3)) +
                      binom2(s.base(3)) * r.base(1));
  add(t(2, 2, 3), s.central(2, 3) * r.base(2) + binom2(r.base(2)) * s.base(3));
  add(t(3, 2, 3), r.base(3) * (s.central(2, 3) + r.base(2) * s.base(3)) +
                      binom2(s.base(3)) * r.base(2));
  return acc;
}

}  // namespace

TEST_CASE("parameter bookkeeping") {
  CHECK(free_param_count(1) == 0);
  CHECK(free_param_count(2) == 2);
  CHECK(free_param_count(3) == 8);
  CHECK(free_param_count(4) == 20);
  CHECK(free_param_indices(3).size() == 8);
  CHECK(free_param_position(2, 1, 1, 2) == 0);
  CHECK(free_param_position(2, 2, 1, 2) == 1);
  CHECK_THROWS_AS(free_param_position(3, 3, 1, 2), std::invalid_argument);

  // positions enumerate contiguously in the canonical order
  auto indices = free_param_indices(4);
  for (std::size_t pos = 0; pos < indices.size(); ++pos)
    CHECK(free_param_position(4, indices[pos].i, indices[pos].j, indices[pos].k) == pos);
}

TEST_CASE("exponent vector") {
  ExponentVector ev = exponent_vector(2, u_gen(2, 1), v_gen(2, 1, 2));
  CHECK(ev.at(1, 1, 2) == 1);
  CHECK(ev.at(2, 1, 2) == 0);

  CHECK(exponent_vector(2, GroupElement::identity(2), el(2, {3, -1, 2})).entries().empty());

  // r = u_1^2, s = u_2: the half term contributes binom2(2) = 1
  ev = exponent_vector(2, el(2, {2, 0, 0}), el(2, {0, 1, 0}));
  CHECK(ev.at(1, 1, 2) == 1);
  CHECK(ev.at(2, 1, 2) == 0);

  // derived indices fold into free ones
  ExponentVector folded(3);
  folded.add(3, 1, 2, Int(1));
  CHECK(folded.at(2, 1, 3) == 1);
  CHECK(folded.at(1, 2, 3) == -1);
}

TEST_CASE("sigma on generators") {
  CocycleParams p = g2_params(exp_rat(1, 3), exp_rat(1, 5));
  CHECK(sigma_eval(p, GroupElement::identity(2), el(2, {2, -1, 3})) == CircleExponent());
  CHECK(sigma_eval(p, el(2, {2, -1, 3}), GroupElement::identity(2)) == CircleExponent());
  CHECK(sigma_eval(p, u_gen(2, 2), v_gen(2, 1, 2)) == exp_rat(1, 5));
  CHECK(sigma_eval(p, u_gen(2, 1), v_gen(2, 1, 2)) == exp_rat(1, 3));
  CHECK(sigma_eval(p, v_gen(2, 1, 2), u_gen(2, 2)) == CircleExponent());
  CHECK(sigma_eval(p, u_gen(2, 1), u_gen(2, 2)) == CircleExponent());

  SplitMix64 rng(211);
  CocycleParams q = random_rational_params(3, rng, 12);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(sigma_eval(q, u_gen(3, i), u_gen(3, j)) == CircleExponent());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      auto [j, k] = pair_at(a);
      auto [l, m] = pair_at(b);
      CHECK(sigma_eval(q, v_gen(3, j, k), v_gen(3, l, m)) == CircleExponent());
    }
}

TEST_CASE("cocycle identity") {
  SplitMix64 rng(213);
  CocycleParams p = random_rational_params(3, rng, 12);
  for (int trial = 0; trial < 300; ++trial) {
    GroupElement r = random_element(3, rng, 5);
    GroupElement s = random_element(3, rng, 5);
    GroupElement t = random_element(3, rng, 5);
    REQUIRE(cocycle_identity_holds(p, r, s, t));
  }
  // triples containing the identity are trivially fine
  GroupElement r = random_element(3, rng, 5);
  GroupElement s = random_element(3, rng, 5);
  CHECK(cocycle_identity_holds(p, GroupElement::identity(3), r, s));
  CHECK(cocycle_identity_holds(p, r, GroupElement::identity(3), s));
  CHECK(cocycle_identity_holds(p, r, s, GroupElement::identity(3)));

  // all parameters 1/7
  CocycleParams sevens(3, IrrationalBasis{});
  for (const FreeIndex& idx : free_param_indices(3))
    sevens.set(idx.i, idx.j, idx.k, exp_rat(1, 7));
  CHECK(cocycle_identity_holds(sevens, u_gen(3, 1), u_gen(3, 2), u_gen(3, 3)));
}

TEST_CASE("pairing") {
  CocycleParams p = g2_params(exp_rat(1, 2), exp_rat(0));
  CHECK(pairing(p, u_gen(2, 1), v_gen(2, 1, 2)) == exp_rat(1, 2));
  GroupElement r = el(2, {3, -2, 1});
  CHECK(pairing(p, r, r) == CircleExponent());

  // closed form for central s: sum_i r_i * (T s)_i
  SplitMix64 rng(217);
  CocycleParams q = random_rational_params(3, rng, 9);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement r3 = random_element(3, rng, 5);
    GroupElement s3 = random_central(3, rng, 5);
    CircleExponent direct = pairing(q, r3, s3);
    CircleExponent closed;
    for (int i = 1; i <= 3; ++i) {
      CircleExponent row;
      for (int k = 2; k <= 3; ++k)
        for (int j = 1; j < k; ++j)
          row = exp_add(row, exp_scale(s3.central(j, k), q.entry(i, j, k)));
      closed = exp_add(closed, exp_scale(r3.base(i), row));
    }
    REQUIRE(direct == closed);
  }

  // bilinearity in the central slot
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement r3 = random_element(3, rng, 5);
    GroupElement s3 = random_central(3, rng, 5);
    GroupElement s3b = random_central(3, rng, 5);
    REQUIRE(pairing(q, r3, multiply(s3, s3b)) ==
            exp_add(pairing(q, r3, s3), pairing(q, r3, s3b)));
  }
}

TEST_CASE("extraction round trip") {
  SplitMix64 rng(219);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      IrrationalBasis basis({"alpha"});
      CocycleParams p = random_symbolic_params(n, basis, rng, 8);
      CocycleParams back = extract_params(n, basis, [&](const GroupElement& r,
                                                        const GroupElement& s) {
        return sigma_eval(p, r, s);
      });
      REQUIRE(back == p);
    }
  }
  CocycleParams zero = extract_params(
      3, IrrationalBasis{},
      [](const GroupElement&, const GroupElement&) { return CircleExponent(); });
  CHECK(zero == CocycleParams(3, IrrationalBasis{}));
}

TEST_CASE("similarity is parameter equality") {
  CocycleParams p = g2_params(exp_rat(1, 3), exp_rat(1, 5));
  CHECK(similar_to(p, p));
  CocycleParams q = g2_params(exp_rat(1, 3), exp_rat(2, 5));
  CHECK_FALSE(similar_to(p, q));
  CocycleParams r(3, IrrationalBasis{});
  CHECK_THROWS_AS(similar_to(p, r), std::invalid_argument);
  CocycleParams s(2, IrrationalBasis({"alpha"}));
  CHECK_THROWS_AS(similar_to(p, s), std::invalid_argument);
}

TEST_CASE("rank-2 formula agrees with the general one") {
  CHECK(g2_sigma(exp_rat(1, 3), exp_rat(1, 5), el(2, {1, 0, 0}), el(2, {0, 1, 0})) ==
        CircleExponent());

  SplitMix64 rng(223);
  CircleExponent t1(rat(2, 7), {{"alpha", rat(1, 2)}});
  CircleExponent t2(rat(5, 8), {{"beta", rat(3)}});
  CocycleParams p = g2_params(t1, t2, IrrationalBasis({"alpha", "beta"}));
  for (long long r1 = -2; r1 <= 2; ++r1)
    for (long long r2 = -2; r2 <= 2; ++r2)
      for (long long r12 = -2; r12 <= 2; ++r12)
        for (long long s1 = -2; s1 <= 2; ++s1)
          for (long long s2 = -2; s2 <= 2; ++s2)
            for (long long s12 = -2; s12 <= 2; ++s12) {
              GroupElement r = el(2, {r1, r2, r12});
              GroupElement s = el(2, {s1, s2, s12});
              REQUIRE(g2_sigma(t1, t2, r, s) == sigma_eval(p, r, s));
            }
}

TEST_CASE("rank-3 formula matches the eight-term expansion") {
  SplitMix64 rng(227);
  CocycleParams p = random_symbolic_params(3, IrrationalBasis({"alpha"}), rng, 10);
  REQUIRE(free_param_indices(3).size() == 8);
  for (int trial = 0; trial < 200; ++trial) {
    GroupElement r = random_element(3, rng, 5);
    GroupElement s = random_element(3, rng, 5);
    REQUIRE(sigma_eval(p, r, s) == g3_sigma(p, r, s));
  }
}
