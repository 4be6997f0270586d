"""Exact incidence-algebra and span calculus for zeta functions of quadratic fields."""

from .arith import BoundError, InvalidFieldError, SplittingType, discriminant, factorize, kronecker, splitting_type
from .field import QuadField, enumerate_ideal_intervals, enumerate_ideals, ideal_count, interval_count
from .incidence import IntervalFn, ReducedFn, convolve_full, convolve_reduced, mobius_full, mobius_reduced
from .theorems import FidelityRecord, Variant, fidelity_report

__version__ = "0.1.0"
