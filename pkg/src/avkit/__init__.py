"""Unexpected hypersurfaces, AV sequences and the algebra underneath them."""
from .field import GF, QQ, FieldSpec
from .poly import LinearChange, Polynomial, parse_polynomial
from .ideal import Ideal
from .monomial_ideal import MonomialIdeal
from .config import Budget, RunConfig
from .hilbert import alpha, h_vector, hilbert_function
from .gin import gin
from .geometry import build_fixture, points_ideal
from .unexpected import (
    adim,
    av_sequence,
    certify_no_unexpected,
    detect,
    dim_triple,
    persistence_table,
    sylvester_witness,
    vdim_edim,
)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldSpec", "LinearChange", "Polynomial", "parse_polynomial", "Ideal", "MonomialIdeal",
    "Budget", "RunConfig", "alpha", "h_vector", "hilbert_function", "gin", "build_fixture", "points_ideal",
    "adim", "av_sequence", "certify_no_unexpected", "detect", "dim_triple", "persistence_table",
    "sylvester_witness", "vdim_edim",
]
