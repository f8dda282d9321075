#include "nilcoh/json_io.hpp"

#include "nilcoh/sweeps.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace nilcoh;
using nilcoh::testing::el;
using nilcoh::testing::exp_rat;
using nilcoh::testing::g2_params;
using nilcoh::testing::rat;

TEST_CASE("element wire format") {
  GroupElement r = el(2, {3, -2, 5});
  Json j = element_to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["coords"][0] == "3");
  CHECK(element_from_json(j) == r);

  // big coordinates survive as strings
  GroupElement big(2, {Int("123456789012345678901234567890"), Int(0), Int(-7)});
  CHECK(element_from_json(element_to_json(big)) == big);

  CHECK_THROWS_AS(element_from_json(parse_json_text("{\"n\":2,\"coords\":[\"1\"]}", "t")),
                  InputError);
}

TEST_CASE("exponent wire format") {
  CircleExponent x(rat(1, 6), {{"alpha", rat(-2, 3)}});
  Json j = exponent_to_json(x);
  CHECK(j["rat"] == "1/6");
  CHECK(j["irr"]["alpha"] == "-2/3");
  CHECK(exponent_from_json(j) == x);
  CHECK(exponent_from_json(Json("5/3")) == exp_rat(5, 3));
}

TEST_CASE("parameter files") {
  const char* text = R"({
    "n": 2,
    "basis": ["alpha"],
    "params": [
      {"i": 1, "j": 1, "k": 2, "t": {"rat": "1/2", "irr": {"alpha": "1/3"}}}
    ]
  })";
  CocycleParams p = params_from_json(parse_json_text(text, "test"));
  CHECK(p.rank() == 2);
  CHECK(p.free_entry(1, 1, 2) == CircleExponent(rat(1, 2), {{"alpha", rat(1, 3)}}));
  // missing entries default to zero
  CHECK(p.free_entry(2, 1, 2) == CircleExponent());

  CHECK(params_from_json(params_to_json(p)) == p);

  // i > k is derived, not settable
  CHECK_THROWS_AS(params_from_json(parse_json_text(
                      R"({"n":3,"params":[{"i":3,"j":1,"k":2,"t":"1/2"}]})", "t")),
                  InputError);
  // undeclared symbol
  CHECK_THROWS_AS(params_from_json(parse_json_text(
                      R"({"n":2,"params":[{"i":1,"j":1,"k":2,"t":{"irr":{"beta":"1/2"}}}]})",
                      "t")),
                  InputError);
  // duplicate entry
  CHECK_THROWS_AS(params_from_json(parse_json_text(
                      R"({"n":2,"params":[{"i":1,"j":1,"k":2,"t":"1/2"},
                                           {"i":1,"j":1,"k":2,"t":"1/3"}]})",
                      "t")),
                  InputError);
  // bad pair
  CHECK_THROWS_AS(params_from_json(parse_json_text(
                      R"({"n":2,"params":[{"i":1,"j":2,"k":2,"t":"1/2"}]})", "t")),
                  InputError);
  CHECK_THROWS_AS(parse_json_text("{not json", "t"), InputError);
}

TEST_CASE("certificate wire format round trip") {
  SplitMix64 rng(601);
  for (int trial = 0; trial < 6; ++trial) {
    CocycleParams p = trial % 2 == 0
                          ? random_rational_params(2, rng, 5)
                          : random_symbolic_params(3, IrrationalBasis({"alpha"}), rng, 5);
    SimplicityCertificate cert = is_simple(p);
    SimplicityCertificate back = certificate_from_json(certificate_to_json(cert));
    std::string why;
    REQUIRE_MESSAGE(recheck_certificate(p, back, &why), why);
  }
}

TEST_CASE("matrix wire format") {
  IntegerMatrix m(2, 2);
  m.at(0, 1) = Int("99999999999999999999");
  m.at(1, 0) = -3;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[[1,2],[3]]", "t")), InputError);
}

TEST_CASE("reports serialize") {
  Report report;
  report.title = "demo";
  report.add("a", true, "fine");
  report.add("b", false);
  Json j = report_to_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["detail"] == "fine");
}
