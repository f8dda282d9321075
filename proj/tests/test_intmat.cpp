#include "nilcoh/intmat.hpp"
#include "nilcoh/rng.hpp"

#include <doctest.h>

using namespace nilcoh;

namespace {

IntegerMatrix mat(std::size_t rows, std::size_t cols,
                  std::initializer_list<long long> entries) {
  std::vector<Int> data;
  for (long long e : entries)
    data.emplace_back(e);
  return IntegerMatrix(rows, cols, std::move(data));
}

IntegerMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols,
                            long long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = rng.uniform(-bound, bound);
  return m;
}

void check_snf(const IntegerMatrix& m) {
  SmithNormalForm snf = smith_normal_form(m);
  REQUIRE(snf.U * m * snf.V == snf.D);
  REQUIRE(snf.U.is_unimodular());
  REQUIRE(snf.V.is_unimodular());
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < bound; ++i) {
    REQUIRE(snf.D.at(i, i) >= 0);
    if (i + 1 < bound) {
      if (snf.D.at(i, i) == 0)
        REQUIRE(snf.D.at(i + 1, i + 1) == 0);
      else
        REQUIRE(snf.D.at(i + 1, i + 1) % snf.D.at(i, i) == 0);
    }
  }
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c)
        REQUIRE(snf.D.at(r, c) == 0);
}

}  // namespace

TEST_CASE("smith normal form, pinned example") {
  SmithNormalForm snf = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
  CHECK(snf.D.at(0, 0) == 1);
  CHECK(snf.D.at(1, 1) == 6);
  check_snf(mat(2, 2, {2, 0, 0, 3}));
}

TEST_CASE("smith normal form, randomized") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng.uniform(0, 4);
    std::size_t cols = 1 + rng.uniform(0, 4);
    check_snf(random_matrix(rng, rows, cols, 9));
  }
  check_snf(IntegerMatrix(0, 3));
  check_snf(IntegerMatrix(3, 0));
  check_snf(IntegerMatrix(2, 2));
}

TEST_CASE("hermite normal form") {
  SplitMix64 rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng.uniform(0, 4);
    std::size_t cols = 1 + rng.uniform(0, 4);
    IntegerMatrix m = random_matrix(rng, rows, cols, 9);
    HermiteNormalForm h = hermite_normal_form(m);
    REQUIRE(h.U.is_unimodular());
    REQUIRE(h.U * m == h.H);
    // echelon shape with positive pivots and reduced entries above
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < h.H.rows(); ++r) {
      std::size_t p = 0;
      while (p < h.H.cols() && h.H.at(r, p) == 0)
        ++p;
      if (p == h.H.cols()) {
        seen_zero_row = true;
        continue;
      }
      REQUIRE_FALSE(seen_zero_row);
      if (r > 0)
        REQUIRE(p > last_pivot);
      last_pivot = p;
      REQUIRE(h.H.at(r, p) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        REQUIRE(h.H.at(above, p) >= 0);
        REQUIRE(h.H.at(above, p) < h.H.at(r, p));
      }
    }
  }
}

TEST_CASE("integer kernel") {
  LatticeBasis k = integer_kernel(mat(1, 2, {1, 1}));
  REQUIRE(k.rank() == 1);
  CHECK(k.rows()[0] == std::vector<Int>{Int(1), Int(-1)});

  SplitMix64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng.uniform(0, 3);
    std::size_t cols = 1 + rng.uniform(0, 3);
    IntegerMatrix m = random_matrix(rng, rows, cols, 6);
    LatticeBasis kernel = integer_kernel(m);
    for (const auto& row : kernel.rows())
      for (const Int& v : m.apply(row))
        REQUIRE(v == 0);
    // rank-nullity against the SNF rank
    SmithNormalForm snf = smith_normal_form(m);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
      if (snf.D.at(i, i) != 0)
        ++rank;
    REQUIRE(kernel.rank() == cols - rank);
  }
}

TEST_CASE("lattice membership") {
  LatticeBasis l(2, {{Int(2), Int(0)}, {Int(0), Int(3)}});
  CHECK(l.contains(std::vector<Int>{Int(4), Int(-3)}));
  CHECK_FALSE(l.contains(std::vector<Int>{Int(1), Int(0)}));
  CHECK(LatticeBasis::zero(2).contains(std::vector<Int>{Int(0), Int(0)}));
  CHECK_FALSE(LatticeBasis::zero(2).contains(std::vector<Int>{Int(1), Int(0)}));
  CHECK(LatticeBasis::full(3).contains(std::vector<Int>{Int(5), Int(-7), Int(11)}));
}

TEST_CASE("lattice preimage, pinned example") {
  // rows 1/2 and 1/3: preimage of Z^2 is lcm(2,3) Z
  LatticeBasis l = lattice_preimage(mat(2, 1, {3, 2}), Int(6));
  REQUIRE(l.rank() == 1);
  CHECK(l.rows()[0] == std::vector<Int>{Int(6)});
}

TEST_CASE("lattice preimage vs exhaustive search") {
  SplitMix64 rng(109);
  for (int trial = 0; trial < 6; ++trial) {
    // random 2x3 rational matrix with denominators <= 4
    Int den(rng.uniform(1, 4));
    IntegerMatrix num(2, 3);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        num.at(r, c) = rng.uniform(-4, 4);
    LatticeBasis l = lattice_preimage(num, den);
    for (long long x = -24; x <= 24; ++x)
      for (long long y = -24; y <= 24; ++y)
        for (long long z = -24; z <= 24; ++z) {
          std::vector<Int> v{Int(x), Int(y), Int(z)};
          bool direct = true;
          for (const Int& entry : num.apply(v))
            direct = direct && entry % den == 0;
          REQUIRE(l.contains(v) == direct);
        }
  }
}
