"""Arithmetic crosscorrelation of binary m-sequences with coprime periods."""

from .arithcorr import arith_cross, arith_cross_shift, arith_auto, classical_cross, count_runs, int_of_seq
from .gf2field import FieldCtx
from .gf2poly import Poly2, list_primitive, parse_poly
from .kernels import BACKEND
from .msequence import BinarySeq, expand, mseq_lfsr, mseq_trace, shift
from .theorem import predict

__version__ = "0.1.0"
