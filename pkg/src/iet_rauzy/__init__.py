"""Interval exchange transformations over quadratic fields: codings, return
words, Rauzy induction and induction graphs, in exact arithmetic."""

from .errors import *  # noqa: F401,F403
from .qfield import QuadNum, qnum, parse_quadnum, height_psi, clear_denominators
from .iet import (
    Iet,
    SemiInterval,
    CanonicalIet,
    Connection,
    iet_new,
    mirror,
    canonical_form,
    is_indecomposable,
    idoc_probe,
    epsilon_for,
)
from .coding import (
    Morphism,
    FactorSet,
    natural_coding,
    interval_I,
    interval_J,
    word_translation,
    factors,
    return_words,
    derived_set,
)
from .induction import (
    rauzy_right,
    rauzy_left,
    apply_chi,
    chi_search,
    division_points,
    is_admissible,
    induce,
    return_basis,
)
from .examples import ALPHA, running_example, fibonacci_rotation

__version__ = "0.1.0"
