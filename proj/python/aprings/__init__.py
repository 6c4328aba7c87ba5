"""Annihilating polynomials, tables of marks and prime spectra of AP rings."""

import json

from . import _aprings
from ._aprings import ApringsError, BoundExceeded, named_groups, presets

__all__ = [
    "ApringsError",
    "BoundExceeded",
    "analyze",
    "annihilating_polynomial",
    "bundled_a5_table",
    "integer_roots",
    "is_admissible",
    "lewis_polynomial",
    "named_groups",
    "pfister_chain_polynomial",
    "presets",
    "quartic_p",
    "quartic_t",
    "roots_of_unity",
    "run_suite",
    "spectrum",
    "sum_set",
    "table_of_marks",
]


def integer_roots(*values):
    return {"atoms": [{"kind": "integers", "values": [str(v) for v in values]}]}


def roots_of_unity(order):
    return {"atoms": [{"kind": "roots_of_unity", "order": order}]}


def _coeffs(text):
    # constant term first
    return [int(c) for c in json.loads(text)]



def _ring(ring):
    return ring if isinstance(ring, str) else json.dumps(ring)


def annihilating_polynomial(roots, n, mode="signed"):
    return _coeffs(_aprings.annihilating_polynomial(json.dumps(roots), n, mode))


def sum_set(roots, n, mode="signed"):
    return json.loads(_aprings.sum_set(json.dumps(roots), n, mode))


def lewis_polynomial(n):
    return _coeffs(_aprings.lewis_polynomial(n))


def quartic_t(n):
    return _coeffs(_aprings.quartic_t(n))


def quartic_p(n):
    return _coeffs(_aprings.quartic_p(n))


def pfister_chain_polynomial(n, k):
    return _coeffs(_aprings.pfister_chain_polynomial(n, k))


def _table(text):
    table = json.loads(text)
    table["marks"] = [[int(v) for v in row] for row in table["marks"]]
    return table


def table_of_marks(group):
    return _table(_aprings.table_of_marks(group))


def bundled_a5_table():
    return _table(_aprings.bundled_a5_table())


def spectrum(ring, primes_up_to=13):
    return json.loads(_aprings.spectrum(_ring(ring), primes_up_to))


def analyze(ring, element):
    out = json.loads(_aprings.analyze(_ring(ring), element))
    out["length"] = int(out["length"])
    out["annihilator"] = [int(c) for c in out["annihilator"]]
    return out


def is_admissible(ring):
    return _aprings.is_admissible(_ring(ring))


def run_suite(suite="paper", filter=""):
    return json.loads(_aprings.run_suite(suite, filter))
