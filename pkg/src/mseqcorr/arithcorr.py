"""Arithmetic and classical correlation of periodic binary sequences.

A period s_0..s_{N-1} is read as the integer I(S) = sum s_k 2^k.  The
arithmetic correlation of A and B is the zeros-minus-ones balance of the
N-bit expansion of |I(A) - I(B)|, negated when I(A) < I(B).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import kernels
from .msequence import BinarySeq, shift

__all__ = [
    "NatBits",
    "CorrValue",
    "CorrelationError",
    "int_of_seq",
    "arith_cross",
    "arith_cross_shift",
    "arith_cross_all_shifts",
    "arith_auto",
    "classical_cross",
    "count_runs",
    "m_via_lemma2",
    "disagreement_count",
]

_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")


class CorrelationError(ValueError):
    pass


@dataclass(frozen=True)
class NatBits:
    """A natural number together with a fixed bit width."""

    value: int
    width: int

    def __post_init__(self):
        if self.width < 0 or not 0 <= self.value < (1 << self.width):
            raise CorrelationError(f"{self.value} does not fit in {self.width} bits")

    def bit(self, k: int) -> int:
        return self.value >> k & 1

    def ones(self) -> int:
        return self.value.bit_count()

    def zeros(self) -> int:
        return self.width - self.value.bit_count()

    def sub(self, other: NatBits) -> tuple[NatBits, bool]:
        """Return (|self - other|, self >= other); the result always fits the common width."""
        if self.width != other.width:
            raise CorrelationError("width mismatch")
        ge = self.value >= other.value
        d = self.value - other.value if ge else other.value - self.value
        return NatBits(d, self.width), ge

    def rotate(self, tau: int) -> NatBits:
        """Integer of the sequence shifted by tau: bit k becomes bit k + tau of the original."""
        n = self.width
        tau %= n
        if not tau:
            return self
        mask = (1 << n) - 1
        return NatBits(((self.value >> tau) | (self.value << (n - tau))) & mask, n)


@dataclass(frozen=True)
class CorrValue:
    value: int
    zeros: int
    ones: int
    a_ge_b: bool

    @property
    def period(self) -> int:
        return self.zeros + self.ones

    def as_dict(self) -> dict:
        return {"value": self.value, "I0": self.zeros, "I1": self.ones, "a_ge_b": self.a_ge_b}


def int_of_seq(s: BinarySeq) -> NatBits:
    return NatBits(int(s.bits[::-1].translate(_TO_ASCII), 2), s.period)


def _corr_of_ints(ia: NatBits, ib: NatBits) -> CorrValue:
    d, ge = ia.sub(ib)
    ones = d.ones()
    zeros = d.width - ones
    return CorrValue(zeros - ones if ge else ones - zeros, zeros, ones, ge)


def _same_period(a: BinarySeq, b: BinarySeq):
    if a.period != b.period:
        raise CorrelationError(f"period mismatch {a.period} != {b.period}; expand to a common period first")


def arith_cross(a: BinarySeq, b: BinarySeq) -> CorrValue:
    _same_period(a, b)
    return _corr_of_ints(int_of_seq(a), int_of_seq(b))


def arith_cross_shift(a: BinarySeq, b: BinarySeq, tau: int) -> CorrValue:
    _same_period(a, b)
    return _corr_of_ints(int_of_seq(a), int_of_seq(b).rotate(tau))


def arith_cross_all_shifts(a: BinarySeq, b: BinarySeq, taus=None) -> list[int]:
    """Arithmetic crosscorrelation values for each tau (default: every shift)."""
    _same_period(a, b)
    ia, ib = int_of_seq(a), int_of_seq(b)
    if taus is None:
        taus = range(a.period)
    return [_corr_of_ints(ia, ib.rotate(tau)).value for tau in taus]


def arith_auto(a: BinarySeq, tau: int) -> CorrValue:
    return arith_cross_shift(a, a, tau)


def classical_cross(a: BinarySeq, b: BinarySeq, tau: int = 0) -> int:
    _same_period(a, b)
    bs = shift(b, tau)
    disagree = sum(x ^ y for x, y in zip(a.bits, bs.bits))
    return a.period - 2 * disagree


def count_runs(a: BinarySeq, b: BinarySeq, n1: int, n2: int) -> tuple[list[int], list[int]]:
    """Tables N01[t], N10[t] for t = 0..n1+n2-1.

    N01[t] counts i with a_i = 0, b_i = 1, then t agreeing positions, then a
    disagreement (indices mod the period); N10 likewise from (1, 0).
    """
    _same_period(a, b)
    if n1 < 1 or n2 < 1 or gcd(n1, n2) != 1:
        raise CorrelationError(f"degrees ({n1}, {n2}) are not coprime")
    depth = n1 + n2
    n01, n10, overflow = kernels.run_tables(a.bits, b.bits, depth)
    if overflow:
        raise CorrelationError(
            f"{overflow} disagreements are followed by >= {depth} agreements; "
            "inputs are not m-sequences of the stated degrees"
        )
    return n01, n10


def m_via_lemma2(n01, n10, N1: int, N2: int) -> int:
    """N1*N2 - 2 * sum_t (t*N01[t] + N10[t])."""
    if len(n01) != len(n10):
        raise CorrelationError("table length mismatch")
    g = sum(t * x for t, x in enumerate(n01)) + sum(n10)
    return N1 * N2 - 2 * g


def disagreement_count(a: BinarySeq, b: BinarySeq) -> int:
    _same_period(a, b)
    return sum(x ^ y for x, y in zip(a.bits, b.bits))

