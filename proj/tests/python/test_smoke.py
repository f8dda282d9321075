import json

import pytest

import nilcoh


def test_cohomology_dim():
    assert [nilcoh.cohomology_dim(n) for n in range(2, 7)] == [2, 8, 20, 40, 70]


def test_group_arithmetic():
    u1 = nilcoh.u(2, 1)
    u2 = nilcoh.u(2, 2)
    product = u1 * u2
    assert nilcoh.coords(product) == [1, 1, 1]
    assert (product * product.inverse()).is_identity()
    assert u1.commutator(u2) == nilcoh.v(2, 1, 2)
    assert nilcoh.v(2, 1, 2).is_central()


def test_element_roundtrip_big_ints():
    big = 10**30
    r = nilcoh.element(2, [big, -1, 7])
    assert nilcoh.coords(r)[0] == big


def test_sigma_and_pairing():
    params = nilcoh.load_params(
        {
            "n": 2,
            "params": [
                {"i": 1, "j": 1, "k": 2, "t": "1/2"},
                {"i": 2, "j": 1, "k": 2, "t": "1/3"},
            ],
        }
    )
    value = nilcoh.sigma(params, nilcoh.u(2, 2), nilcoh.v(2, 1, 2))
    assert str(value) == "1/3"
    assert str(nilcoh.pairing(params, nilcoh.u(2, 1), nilcoh.v(2, 1, 2))) == "1/2"


def test_simplicity_torsion_example():
    params = nilcoh.load_params(
        {
            "n": 2,
            "params": [
                {"i": 1, "j": 1, "k": 2, "t": "1/2"},
                {"i": 2, "j": 1, "k": 2, "t": "1/3"},
            ],
        }
    )
    cert = nilcoh.simplicity(params)
    assert cert["verdict"] == "not_simple"
    assert cert["witness"] == ["6"]
    assert nilcoh.regular_central_subgroup(params) == [[6]]

    simple = nilcoh.load_params(
        {
            "n": 2,
            "basis": ["alpha", "beta"],
            "params": [
                {"i": 1, "j": 1, "k": 2, "t": {"irr": {"alpha": "1/1"}}},
                {"i": 2, "j": 1, "k": 2, "t": {"irr": {"beta": "1/1"}}},
            ],
        }
    )
    assert nilcoh.simplicity(simple)["verdict"] == "simple"


def test_rejects_derived_indices():
    with pytest.raises(ValueError):
        nilcoh.load_params(
            {"n": 3, "params": [{"i": 3, "j": 1, "k": 2, "t": "1/2"}]}
        )


def test_omega_duality():
    params = nilcoh.load_params(
        {"n": 2, "params": [{"i": 1, "j": 1, "k": 2, "t": "1/5"}]}
    )
    r = nilcoh.u(2, 1)
    s = nilcoh.v(2, 1, 2)
    assert nilcoh.omega(2, r, s) == [1, 0]
    assert str(nilcoh.sigma(params, r, s)) == "1/5"


def test_aut_action_identity():
    params = nilcoh.load_params(
        {"n": 2, "params": [{"i": 1, "j": 1, "k": 2, "t": "1/7"}]}
    )
    acted = nilcoh.act_on_params([["1", "0"], ["0", "1"]], params)
    assert acted == params


def test_k2_report():
    report = nilcoh.verify_k2()
    assert report["pass"] is True


def test_suites():
    params = nilcoh.load_params(
        {"n": 2, "params": [{"i": 1, "j": 1, "k": 2, "t": "1/4"}]}
    )
    for suite in ("cocycle", "relations", "kgroup"):
        report = nilcoh.run_suite(params, suite, seed=1, trials=50, bound=4)
        assert report["pass"] is True, json.dumps(report, indent=2)
