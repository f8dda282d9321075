"""Exact computations with 2-cocycles of free nilpotent groups of class 2.

Thin wrapper over the C++ extension module. Arbitrary-precision integers
cross the boundary as decimal strings; this layer converts them to ints and
JSON payloads to dicts.
"""

import json

try:
    from ._nilcoh import (
        CircleExponent,
        CocycleParams,
        GroupElement as _GroupElement,
        InputError,
        cocycle_identity_holds,
        cohomology_dim,
        identity as _identity,
        u as _u,
        v as _v,
        act_on_params,
        pullback,
        pairing,
        sigma,
        verify_witness,
    )
    from . import _nilcoh as _core
except ImportError:  # running against a build tree, module not inside the package
    from _nilcoh import (
        CircleExponent,
        CocycleParams,
        GroupElement as _GroupElement,
        InputError,
        cocycle_identity_holds,
        cohomology_dim,
        identity as _identity,
        u as _u,
        v as _v,
        act_on_params,
        pullback,
        pairing,
        sigma,
        verify_witness,
    )
    import _nilcoh as _core

__all__ = [
    "CircleExponent",
    "CocycleParams",
    "GroupElement",
    "InputError",
    "act_on_params",
    "cocycle_identity_holds",
    "cohomology_dim",
    "element",
    "identity",
    "load_params",
    "omega",
    "pairing",
    "pullback",
    "regular_central_subgroup",
    "run_suite",
    "sigma",
    "simplicity",
    "u",
    "v",
    "verify_k2",
    "verify_witness",
]

GroupElement = _GroupElement


def element(n, coords):
    """Group element from integer coordinates (base, then central in colex order)."""
    return _GroupElement(n, [str(int(c)) for c in coords])


def coords(r):
    return [int(c) for c in r.coords]


def identity(n):
    return _identity(n)


def u(n, i):
    return _u(n, i)


def v(n, j, k):
    return _v(n, j, k)


def load_params(source):
    """Cocycle parameters from a JSON string or dict in the parameter-file format."""
    if isinstance(source, dict):
        source = json.dumps(source)
    return _core.params_from_json(source)


def params_dict(params):
    return json.loads(params.to_json())


def omega(n, r, s):
    return [int(x) for x in _core.omega(n, r, s)]


def simplicity(params):
    """Simplicity certificate as a dict (verdict, S-basis, witness, proof)."""
    return json.loads(_core.simplicity_json(params))


def regular_central_subgroup(params):
    return [[int(x) for x in row] for row in _core.regular_central_subgroup(params)]


def verify_k2():
    return json.loads(_core.verify_k2_json())


def run_suite(params, suite, seed=0, trials=200, bound=5):
    return json.loads(_core.run_suite_json(params, suite, seed, trials, bound))
