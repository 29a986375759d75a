"""Closed-form arithmetic crosscorrelation of two m-sequences with coprime degrees.

For primitive g1, g2 of coprime degrees n1, n2 let F be the inverse of g2
modulo g1, l = deg F and f0 = F(0).  Then

    M(A, B) = (-1)^(f0 + 1) * (2^(n1 - l) - 1)

for the canonical-phase sequences a_i = T1(alpha1^i), b_i = T2(alpha2^i).
This module also carries the per-gap counting formulas that the closed form
is assembled from, each paired with a brute-force enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernels
from .gf2field import FieldCtx
from .gf2poly import Poly2, PolyError, is_primitive, parse_poly, poly_mod_inverse

__all__ = [
    "TheoremError",
    "Prediction",
    "HalfInt",
    "CrtParams",
    "predict",
    "crt_params",
    "v_closed",
    "u1_closed",
    "u2_closed",
    "u_closed",
    "u_defn",
    "v_defn",
    "m_via_lemma4",
    "equality_condition",
    "ORACLE_MAX_DEGREE_SUM",
]

#: Enumeration cost is 2^(t+3) <= 2^(n1+n2+2).
ORACLE_MAX_DEGREE_SUM = 20


class TheoremError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class HalfInt:
    """Exact multiple of 1/2, stored doubled."""

    doubled: int

    @classmethod
    def of(cls, value) -> HalfInt:
        if isinstance(value, HalfInt):
            return value
        frac = Fraction(value) * 2
        if frac.denominator != 1:
            raise TheoremError(f"{value} is not a half-integer")
        return cls(frac.numerator)

    @classmethod
    def pow2(cls, e: int, sign: int = 1) -> HalfInt:
        """sign * 2^e for e >= -1."""
        if e < -1:
            raise TheoremError(f"2^{e} is not a half-integer")
        return cls(sign << (e + 1))

    def __add__(self, other):
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.doubled * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.doubled == HalfInt.of(other).doubled
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(Fraction(self.doubled, 2))

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if self.doubled % 2:
            raise TheoremError(f"{self} is not an integer")
        return self.doubled // 2

    def to_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __str__(self):
        return str(self.doubled // 2) if self.doubled % 2 == 0 else f"{self.doubled}/2"

    def __repr__(self):
        return f"HalfInt({self})"


@dataclass(frozen=True)
class Prediction:
    g1: Poly2
    g2: Poly2
    F: Poly2
    l: int
    f0: int
    value: int

    @property
    def n1(self) -> int:
        return self.g1.degree

    @property
    def n2(self) -> int:
        return self.g2.degree

    @property
    def bound(self) -> int:
        return (1 << min(self.n1, self.n2)) - 1

    def as_dict(self) -> dict:
        return {
            "g1": str(self.g1),
            "g2": str(self.g2),
            "n1": self.n1,
            "n2": self.n2,
            "F": str(self.F),
            "l": self.l,
            "f0": self.f0,
            "M": self.value,
        }


def _check_pair(g1: Poly2, g2: Poly2) -> tuple[int, int]:
    for g in (g1, g2):
        try:
            ok = is_primitive(g)
        except PolyError as exc:
            raise TheoremError(str(exc)) from None
        if not ok:
            raise TheoremError(f"{g} is not primitive")
    n1, n2 = g1.degree, g2.degree
    if gcd(n1, n2) != 1:
        raise TheoremError(f"gcd({n1}, {n2}) != 1")
    return n1, n2


def predict(g1: Poly2 | str, g2: Poly2 | str) -> Prediction:
    g1, g2 = parse_poly(g1), parse_poly(g2)
    n1, _ = _check_pair(g1, g2)
    # modulo x+1 every polynomial of odd weight is 1; primitive g2 has odd weight
    F = Poly2(1) if n1 == 1 else poly_mod_inverse(g2, g1)
    l = F.degree
    f0 = F.coeff(0)
    value = (1 << (n1 - l)) - 1
    return Prediction(g1, g2, F, l, f0, value if f0 else -value)


def equality_condition(g1: Poly2 | str, g2: Poly2 | str) -> bool:
    """True iff g2 = 1 (mod g1), the case |M| = 2^n1 - 1 (requires n1 < n2)."""
    g1, g2 = parse_poly(g1), parse_poly(g2)
    n1, n2 = _check_pair(g1, g2)
    if n1 >= n2:
        raise TheoremError("the equality condition is stated for n1 < n2")
    return (g2 % g1).mask == 1


@dataclass(frozen=True)
class CrtParams:
    N1: int
    N2: int
    r1: int
    r2: int

    def phi(self, lam: int, mu: int) -> int:
        return (lam * self.r2 * self.N2 + mu * self.r1 * self.N1) % (self.N1 * self.N2)

    def phi_inverse(self, i: int) -> tuple[int, int]:
        return i % self.N1, i % self.N2


def crt_params(N1: int, N2: int) -> CrtParams:
    if N1 < 1 or N2 < 1 or gcd(N1, N2) != 1:
        raise TheoremError(f"gcd({N1}, {N2}) != 1")
    r1 = pow(N1, -1, N2) if N2 > 1 else 0
    r2 = pow(N2, -1, N1) if N1 > 1 else 0
    return CrtParams(N1, N2, r1, r2)


def _check_t(t: int, n1: int, n2: int):
    if not 0 <= t <= n1 + n2 - 1:
        raise TheoremError(f"t = {t} outside 0..{n1 + n2 - 1}")


def v_closed(t: int, n2: int, n1: int | None = None) -> HalfInt:
    if n1 is not None:
        _check_t(t, n1, n2)
    elif t < 0:
        raise TheoremError(f"t = {t} is negative")
    if t <= n2 - 2:
        return HalfInt.pow2(n2 - t - 2)
    if t == n2 - 1:
        return HalfInt.of(1)
    return HalfInt(0)


def u1_closed(t: int, n1: int, n2: int) -> HalfInt:
    _check_t(t, n1, n2)
    if t <= n1 + n2 - 2:
        return HalfInt.pow2(n1 + n2 - t - 3)
    return HalfInt(1)


def u2_closed(t: int, n1: int, n2: int, l: int, f0: int) -> HalfInt:
    _check_t(t, n1, n2)
    if not 0 <= l <= n1 - 1:
        raise TheoremError(f"l = {l} outside 0..{n1 - 1}")
    even = 1 if f0 == 0 else -1  # (-1)^f0
    if t <= n2 + l - 2:
        return HalfInt(0)
    if t == n2 + l - 1:
        return HalfInt.pow2(n1 - l - 2, -even)
    if t <= n1 + n2 - 2:
        return HalfInt.pow2(n1 + n2 - t - 3, even)
    return HalfInt(even)


def u_closed(t: int, n1: int, n2: int, l: int, f0: int) -> HalfInt:
    return u1_closed(t, n1, n2) + u2_closed(t, n1, n2, l, f0)


def _scaled(q: int, s: int, shift: int) -> HalfInt:
    num = 2 * q * s
    if num % (1 << shift):
        raise TheoremError(f"{q}*{s}/2^{shift} is not a half-integer")
    return HalfInt(num >> shift)


def u_defn(t: int, ctx1: FieldCtx, ctx2: FieldCtx) -> HalfInt:
    """q1*q2/2^(t+3) times the signed count over (c0', c0..c_{t+1}) with g1 | f1 and g2 | f2."""
    n1, n2 = ctx1.n, ctx2.n
    _check_t(t, n1, n2)
    if n1 + n2 > ORACLE_MAX_DEGREE_SUM:
        raise TheoremError(f"enumeration capped at n1 + n2 <= {ORACLE_MAX_DEGREE_SUM}")
    s = kernels.u_sign_sum(t + 2, ctx1.modulus.mask, ctx2.modulus.mask)
    return _scaled(ctx1.q * ctx2.q, s, t + 3)


def v_defn(t: int, ctx2: FieldCtx, n1: int | None = None) -> HalfInt:
    """q2/2^(t+2) times the signed count over (c0..c_{t+1}) with g2 | f2."""
    n2 = ctx2.n
    if n1 is not None:
        _check_t(t, n1, n2)
        if n1 + n2 > ORACLE_MAX_DEGREE_SUM:
            raise TheoremError(f"enumeration capped at n1 + n2 <= {ORACLE_MAX_DEGREE_SUM}")
    elif t < 0 or t + 2 > ORACLE_MAX_DEGREE_SUM + 1:
        raise TheoremError(f"t = {t} out of range")
    s = kernels.v_sign_sum(t + 2, ctx2.modulus.mask)
    return _scaled(ctx2.q, s, t + 2)


def m_via_lemma4(n01, N1: int, N2: int) -> int:
    """(N1*N2 + N1 - N2 + 1)/2 - 2 * sum_t t*N01[t]."""
    head = N1 * N2 + N1 - N2 + 1
    if head % 2:
        raise TheoremError(f"N1*N2 + N1 - N2 + 1 = {head} is odd")
    return head // 2 - 2 * sum(t * x for t, x in enumerate(n01))
