"""Comprehensive Groebner systems over Q via an iterative work-list algorithm."""

__version__ = "0.1.0"

from .algebra import RingSpec, TermOrdering, compare  # noqa: E402
from .polynomial import Polynomial, parse, render  # noqa: E402
from .groebner import IdealHandle, normal_form, reduced_groebner_basis  # noqa: E402
from .cgs import CGSOutput, EngineConfig, Segment, cgs_iter  # noqa: E402

__all__ = [
    "RingSpec", "TermOrdering", "compare", "Polynomial", "parse", "render",
    "IdealHandle", "normal_form", "reduced_groebner_basis",
    "CGSOutput", "EngineConfig", "Segment", "cgs_iter", "__version__",
]
