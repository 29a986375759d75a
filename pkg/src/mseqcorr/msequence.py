"""Periodic binary sequences and m-sequence generation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from . import kernels
from .gf2field import FieldCtx, FieldError, trace
from .gf2poly import Poly2, parse_poly

__all__ = [
    "BinarySeq",
    "SequenceError",
    "mseq_trace",
    "mseq_lfsr",
    "shift",
    "expand",
    "pattern_census",
    "add_seq",
    "find_shift",
    "minimal_period",
]

_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")
_FROM_ASCII = bytes.maketrans(b"01", b"\x00\x01")


class SequenceError(ValueError):
    pass


@dataclass(frozen=True)
class BinarySeq:
    """One period of a periodic 0/1 sequence, one value per byte."""

    bits: bytes

    def __post_init__(self):
        bits = bytes(self.bits)
        if not bits:
            raise SequenceError("a sequence needs a period of at least 1")
        if bits.translate(None, b"\x00\x01"):
            raise SequenceError("bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> BinarySeq:
        """Accept ``"1001011"`` or the comma-separated ``"1,0,0,1,0,1,1"`` form."""
        s = "".join(text.replace(",", " ").replace("(", " ").replace(")", " ").split())
        if not s or s.strip("01"):
            raise SequenceError(f"not a 0/1 string: {text!r}")
        return cls(s.encode().translate(_FROM_ASCII))

    @property
    def period(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i % len(self.bits)]

    def __iter__(self):
        return iter(self.bits)

    def __str__(self):
        return self.bits.translate(_TO_ASCII).decode()

    def to_csv(self) -> str:
        return ",".join(str(self))

    def weight(self) -> int:
        return self.bits.count(1)


def mseq_trace(g: Poly2 | str) -> BinarySeq:
    """Canonical-phase m-sequence a_i = T(alpha^i), i = 0..2^n - 2."""
    try:
        ctx = FieldCtx(parse_poly(g))
    except FieldError as exc:
        raise SequenceError(str(exc)) from None
    out = bytearray(ctx.q - 1)
    x = ctx.one
    alpha = ctx.alpha
    for i in range(ctx.q - 1):
        out[i] = trace(x)
        x = x * alpha
    return BinarySeq(bytes(out))


def mseq_lfsr(g: Poly2 | str, seed) -> BinarySeq:
    """Run the linear recurrence with characteristic polynomial g from the first n bits ``seed``."""
    g = parse_poly(g)
    try:
        ctx = FieldCtx(g)
    except FieldError as exc:
        raise SequenceError(str(exc)) from None
    n = ctx.n
    seed = list(seed)
    if len(seed) != n:
        raise SequenceError(f"seed must have {n} bits")
    if not any(seed):
        raise SequenceError("zero seed generates the zero sequence")
    taps = [j for j in range(n) if g.coeff(j)]
    state = seed
    out = bytearray()
    for _ in range(ctx.q - 1):
        out.append(state[0])
        fb = 0
        for j in taps:
            fb ^= state[j]
        state = state[1:] + [fb]
    return BinarySeq(bytes(out))


def shift(s: BinarySeq, tau: int) -> BinarySeq:
    """s'[k] = s[k + tau]."""
    tau %= s.period
    return BinarySeq(s.bits[tau:] + s.bits[:tau])


def expand(s: BinarySeq, n: int) -> BinarySeq:
    if n <= 0 or n % s.period:
        raise SequenceError(f"period {s.period} does not divide {n}")
    return BinarySeq(s.bits * (n // s.period))


def pattern_census(s: BinarySeq, t: int) -> dict[tuple[int, ...], int]:
    """Counts of each cyclic length-t window over one period, keyed by the window tuple."""
    if not 1 <= t <= s.period:
        raise SequenceError(f"window length must be in 1..{s.period}")
    counts = kernels.census(s.bits, t)
    return {pat: counts[i] for i, pat in enumerate(product((0, 1), repeat=t))}


def add_seq(a: BinarySeq, b: BinarySeq) -> BinarySeq:
    if a.period != b.period:
        raise SequenceError(f"period mismatch {a.period} != {b.period}; expand first")
    return BinarySeq(bytes(x ^ y for x, y in zip(a.bits, b.bits)))


def find_shift(s: BinarySeq, target: BinarySeq) -> int | None:
    """Smallest tau with shift(s, tau) == target, or None."""
    if s.period != target.period:
        return None
    k = (s.bits + s.bits).find(target.bits)
    return None if k < 0 else k


def minimal_period(s: BinarySeq) -> int:
    n = s.period
    for d in range(1, n + 1):
        if n % d == 0 and s.bits == s.bits[:d] * (n // d):
            return d
    return n


def common_period(*seqs: BinarySeq) -> int:
    n = 1
    for s in seqs:
        n = n * s.period // gcd(n, s.period)
    return n


def max_zero_run(s: BinarySeq) -> int:
    return kernels.max_zero_run(s.bits)
