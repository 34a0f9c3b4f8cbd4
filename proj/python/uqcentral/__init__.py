"""Python bindings for the uqc library."""

import json
from fractions import Fraction

from ._uqcentral import (
    BorelElem,
    Error,
    MathError,
    ParseError,
    PoleError,
    QRat,
    compare_with_theorem,
    dual_basis,
    omega,
    pair,
    radical_check,
    relation_suite,
    scalar_value,
    serre_elements,
    solve_ab,
    tau,
    weight_dim,
    words_of_weight,
)
from . import _uqcentral


def gram(nu):
    return json.loads(_uqcentral.gram_json(tuple(nu)))


def central_element(parallel=False):
    return json.loads(_uqcentral.central_element_json(parallel))


def theorem_element():
    return json.loads(_uqcentral.theorem_element_json())


def hamiltonian(q0=None):
    """Exact 16x16 matrix; entries are QRat text, or Fractions when q0 is given."""
    if q0 is None:
        return _uqcentral.hamiltonian(None)
    return [[Fraction(v) for v in row] for row in _uqcentral.hamiltonian(str(Fraction(q0)))]


def element(text, side="plus"):
    return BorelElem.parse(text, side)
