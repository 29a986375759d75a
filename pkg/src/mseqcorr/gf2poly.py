"""Polynomials over GF(2), bit-packed into Python integers.

The polynomial c_k x^k + ... + c_1 x + c_0 is stored as the integer whose
bit i is c_i, so ``0b1011`` is x^3 + x + 1.  Values are immutable and all
functions are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "ZERO_DEGREE",
    "Poly2",
    "PolyError",
    "PolyParseError",
    "NotInvertibleError",
    "poly_add",
    "poly_mul",
    "poly_divmod",
    "poly_ext_gcd",
    "poly_mod_inverse",
    "poly_powmod",
    "is_irreducible",
    "is_primitive",
    "list_primitive",
    "parse_poly",
    "format_poly",
]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = float("-inf")

PRIMITIVE_MAX_DEGREE = 24
LIST_MAX_DEGREE = 16


class PolyError(ValueError):
    pass


class PolyParseError(PolyError):
    pass


class NotInvertibleError(PolyError):
    """Raised by :func:`poly_mod_inverse`; ``gcd`` holds the common factor."""

    def __init__(self, a: Poly2, m: Poly2, gcd: Poly2):
        super().__init__(f"{a} is not invertible modulo {m} (gcd = {gcd})")
        self.gcd = gcd


@dataclass(frozen=True, order=True)
class Poly2:
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0:
            raise PolyError("coefficient mask must be nonnegative")

    @classmethod
    def from_exponents(cls, *exps: int) -> Poly2:
        mask = 0
        for e in exps:
            if mask >> e & 1:
                raise PolyError(f"duplicate exponent {e}")
            mask |= 1 << e
        return cls(mask)

    @property
    def degree(self):
        return self.mask.bit_length() - 1 if self.mask else ZERO_DEGREE

    def coeff(self, i: int) -> int:
        return self.mask >> i & 1

    def __bool__(self):
        return self.mask != 0

    def __add__(self, other: Poly2) -> Poly2:
        return Poly2(self.mask ^ other.mask)

    __sub__ = __add__

    def __mul__(self, other: Poly2) -> Poly2:
        return Poly2(_clmul(self.mask, other.mask))

    def __divmod__(self, other: Poly2):
        return poly_divmod(self, other)

    def __floordiv__(self, other: Poly2) -> Poly2:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Poly2) -> Poly2:
        return Poly2(_mod(self.mask, other.mask))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly2({format_poly(self)!r})"


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _mod(a: int, m: int) -> int:
    if not m:
        raise ZeroDivisionError("division by zero polynomial")
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def _divmod(a: int, m: int) -> tuple[int, int]:
    if not m:
        raise ZeroDivisionError("division by zero polynomial")
    dm = m.bit_length()
    q = 0
    da = a.bit_length()
    while da >= dm:
        shift = da - dm
        q |= 1 << shift
        a ^= m << shift
        da = a.bit_length()
    return q, a


def _mulmod(a: int, b: int, m: int) -> int:
    return _mod(_clmul(a, b), m)


def _powmod(a: int, e: int, m: int) -> int:
    result = _mod(1, m)
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return result


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def poly_add(a: Poly2, b: Poly2) -> Poly2:
    return Poly2(a.mask ^ b.mask)


def poly_mul(a: Poly2, b: Poly2) -> Poly2:
    return Poly2(_clmul(a.mask, b.mask))


def poly_divmod(a: Poly2, m: Poly2) -> tuple[Poly2, Poly2]:
    """Return ``(q, r)`` with ``a = q*m + r`` and ``deg r < deg m``."""
    q, r = _divmod(a.mask, m.mask)
    return Poly2(q), Poly2(r)


def poly_powmod(a: Poly2, e: int, m: Poly2) -> Poly2:
    if e < 0:
        raise PolyError("negative exponent")
    return Poly2(_powmod(a.mask, e, m.mask))


def poly_ext_gcd(a: Poly2, b: Poly2) -> tuple[Poly2, Poly2, Poly2]:
    """Extended Euclid: return ``(g, s, t)`` with ``a*s + b*t = g = gcd(a, b)``."""
    if not a and not b:
        raise PolyError("gcd(0, 0) is undefined")
    r0, r1 = a.mask, b.mask
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _clmul(q, s1)
        t0, t1 = t1, t0 ^ _clmul(q, t1)
    # every nonzero polynomial over GF(2) is already monic
    return Poly2(r0), Poly2(s0), Poly2(t0)


def poly_mod_inverse(a: Poly2, m: Poly2) -> Poly2:
    """Return the unique F with ``deg F < deg m`` and ``a*F = 1 (mod m)``."""
    if not m or m.degree < 1:
        raise PolyError("modulus must have degree >= 1")
    g, s, _ = poly_ext_gcd(a % m, m)
    if g.mask != 1:
        raise NotInvertibleError(a, m, g)
    return s % m


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(g: Poly2) -> bool:
    """Rabin's test: x^(2^n) = x mod g, and gcd(x^(2^(n/p)) - x, g) = 1 for primes p | n."""
    n = g.degree
    if n < 1:
        raise PolyError("irreducibility is defined for degree >= 1")
    m = g.mask
    if n == 1:
        return True
    if not m & 1:
        return False

    def frob(k: int) -> int:
        y = 0b10
        for _ in range(k):
            y = _mulmod(y, y, m)
        return y

    if frob(n) != _mod(0b10, m):
        return False
    for p in _prime_factors(n):
        if _gcd(m, frob(n // p) ^ 0b10) != 1:
            return False
    return True


@lru_cache(maxsize=4096)
def _is_primitive_mask(m: int) -> bool:
    g = Poly2(m)
    n = g.degree
    if not is_irreducible(g):
        return False
    order = (1 << n) - 1
    if _powmod(0b10, order, m) != 1:
        return False
    return all(_powmod(0b10, order // p, m) != 1 for p in _prime_factors(order))


def is_primitive(g: Poly2) -> bool:
    n = g.degree
    if not (1 <= n <= PRIMITIVE_MAX_DEGREE):
        raise PolyError(f"primitivity test supports 1 <= degree <= {PRIMITIVE_MAX_DEGREE}, got {n}")
    return _is_primitive_mask(g.mask)


def _euler_phi(n: int) -> int:
    out = n
    for p in _prime_factors(n):
        out -= out // p
    return out


def primitive_count(n: int) -> int:
    """Number of primitive polynomials of degree n, phi(2^n - 1) / n."""
    return _euler_phi((1 << n) - 1) // n


@lru_cache(maxsize=None)
def _list_primitive(n: int) -> tuple[Poly2, ...]:
    lo = 1 << n
    return tuple(Poly2(m) for m in range(lo | 1, lo << 1, 2) if _is_primitive_mask(m))


def list_primitive(n: int) -> list[Poly2]:
    """All primitive polynomials of degree n, ascending by mask."""
    if not (1 <= n <= LIST_MAX_DEGREE):
        raise PolyError(f"degree must be in 1..{LIST_MAX_DEGREE}, got {n}")
    return list(_list_primitive(n))


_TERM = re.compile(r"^(?:1|x|x\^(\d+))$")


def parse_poly(text: str | Poly2) -> Poly2:
    """Parse ``"x^3+x+1"`` or a hex mask such as ``"0xB"``."""
    if isinstance(text, Poly2):
        return text
    s = "".join(text.split())
    if not s:
        raise PolyParseError("empty polynomial")
    if s.lower().startswith("0x"):
        try:
            return Poly2(int(s, 16))
        except ValueError:
            raise PolyParseError(f"bad hex mask {text!r}") from None
    if s == "0":
        return Poly2(0)
    mask = 0
    for term in s.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise PolyParseError(f"malformed term {term!r} in {text!r}")
        if term == "1":
            e = 0
        elif term == "x":
            e = 1
        else:
            e = int(match.group(1))
        if mask >> e & 1:
            raise PolyParseError(f"duplicate exponent {e} in {text!r}")
        mask |= 1 << e
    return Poly2(mask)


def format_poly(p: Poly2) -> str:
    if not p:
        return "0"
    terms = []
    for e in range(p.degree, -1, -1):
        if p.mask >> e & 1:
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
    return "+".join(terms)


def format_hex(p: Poly2) -> str:
    return hex(p.mask)
