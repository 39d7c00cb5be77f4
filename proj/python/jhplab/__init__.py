"""Torsion-free classes, Grothendieck monoids and the Jordan-Hoelder property."""

import json

from ._jhplab import (
    PreconditionError,
    ResourceError,
    bruhat_inversions,
    c_sortable,
    cayley_dot,
    census,
    coxeter_element,
    inversions,
    jhp,
    regress,
    simples,
    support,
    table_csv,
    torsion_free_class,
)
from . import _jhplab

__all__ = [
    "PreconditionError",
    "ResourceError",
    "analyze",
    "analyze_a2",
    "analyze_nakayama",
    "analyze_presentation",
    "bruhat_inversions",
    "c_sortable",
    "cayley_dot",
    "census",
    "coxeter_element",
    "inversions",
    "jhp",
    "regress",
    "simples",
    "support",
    "table_csv",
    "torsion_free_class",
]


def analyze(quiver, w, bound=0):
    """Grothendieck monoid report of F(w) over a type-A quiver, as a dict."""
    return json.loads(_jhplab.report_type_a(w, quiver, bound))


def analyze_presentation(text, bound=0):
    return json.loads(_jhplab.report_presentation(text, bound))


def analyze_nakayama(kupisch, members, bound=0):
    """kupisch: "kupisch: 1,2,3"; members: "1:1 2:2"."""
    return json.loads(_jhplab.report_nakayama(kupisch, members, bound))


def analyze_a2(m, n, bound=0):
    return json.loads(_jhplab.report_a2(m, n, bound))
