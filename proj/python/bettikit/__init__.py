"""Exact betti tables, pure diagrams and Boij-Soderberg decompositions.

Tables are dicts mapping (p, q) to Fraction; entries may be given as int,
Fraction or "a/b" strings.
"""

from fractions import Fraction

from . import _bettikit
from ._bettikit import Error, IterationLimitExceeded, NegativeEntry, NotInCone, ParseError

__all__ = [
    "Error",
    "IterationLimitExceeded",
    "NegativeEntry",
    "NotInCone",
    "ParseError",
    "betti",
    "check_first_strand",
    "check_ndm",
    "check_next_to_max",
    "decompose",
    "emit_table",
    "kappa_max",
    "kappa_next_max",
    "multiplicity",
    "parse_table",
    "pure",
    "reconstruct",
]


def _to_native(table):
    return {(int(p), int(q)): str(Fraction(v)) for (p, q), v in table.items()}


def _from_native(table):
    return {cell: Fraction(v) for cell, v in table.items()}


def _terms_to_native(terms):
    return [(str(Fraction(c)), list(d)) for c, d in terms]


def pure(degrees):
    """Herzog-Kuhl diagram of a strictly increasing degree sequence: (table, multiplicity)."""
    table, mult = _bettikit.pure(list(degrees))
    return _from_native(table), Fraction(mult)


def kappa_max(p, q, e):
    return int(_bettikit.kappa_max(p, q, e))


def kappa_next_max(p, e):
    return int(_bettikit.kappa_next_max(p, e))


def decompose(table):
    """Greedy decomposition into pure diagrams: [(coefficient, degrees), ...]."""
    return [(Fraction(c), tuple(d)) for c, d in _bettikit.decompose(_to_native(table))]


def reconstruct(terms):
    return _from_native(_bettikit.reconstruct(_terms_to_native(terms)))


def multiplicity(terms, codim):
    return Fraction(_bettikit.multiplicity(_terms_to_native(terms), codim))


def betti(ideal, q_max, field=""):
    """Betti table of S/I from ideal-file text: (table, complete)."""
    table, complete = _bettikit.betti(ideal, q_max, field)
    return _from_native(table), complete


def check_first_strand(table, codim, q=0, nd=False):
    return _bettikit.check_first_strand(_to_native(table), codim, q, nd)


def check_next_to_max(table, codim, lgp=False):
    return _bettikit.check_next_to_max(_to_native(table), codim, lgp)


def check_ndm(table, d, m):
    return _bettikit.check_ndm(_to_native(table), d, m)


def parse_table(text):
    return _from_native(_bettikit.parse_table(text))


def emit_table(table):
    return _bettikit.emit_table(_to_native(table))
