"""Exact Bruinier invariants for unitary groups of diag(1, ..., 1, -1) over Q(sqrt(-d))."""

from .bruinier import (
    KReport,
    Verdict,
    VerdictTable,
    freeness_bound,
    k_closed,
    k_raw,
    mirror_classes,
    sweep,
    verdict,
)
from .characters import QuadChar, chi, field_params, kronecker
from .covolumes import Covolume, DiscCase, Lattice, vol_L, vol_M, vol_numeric
from .exact import ExactValue, as_rational, exact_div, exact_mul, exact_to_float, parse_exact
from .special_values import (
    bernoulli,
    bernoulli_poly,
    gen_bernoulli,
    l_numeric,
    l_odd_exact,
    zeta_even_exact,
    zeta_numeric,
)

__version__ = "0.1.0"
