"""GF(2^n) built as GF(2)[x] / (g) for a primitive modulus g.

The primitive element is always the residue class of x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .gf2poly import Poly2, PolyError, _mod, _mulmod, is_primitive, parse_poly

__all__ = ["FieldCtx", "FieldElem", "FieldError", "fe_mul", "fe_pow", "trace"]


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldCtx:
    modulus: Poly2
    n: int = field(init=False)
    q: int = field(init=False)

    def __post_init__(self):
        modulus = parse_poly(self.modulus)
        object.__setattr__(self, "modulus", modulus)
        try:
            ok = is_primitive(modulus)
        except PolyError as exc:
            raise FieldError(str(exc)) from None
        if not ok:
            raise FieldError(f"{modulus} is not primitive")
        object.__setattr__(self, "n", modulus.degree)
        object.__setattr__(self, "q", 1 << modulus.degree)

    def __repr__(self):
        return f"FieldCtx({str(self.modulus)!r})"

    def elem(self, value: int | Poly2) -> FieldElem:
        mask = value.mask if isinstance(value, Poly2) else value
        return FieldElem(_mod(mask, self.modulus.mask), self)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(0, self)

    @property
    def one(self) -> FieldElem:
        return FieldElem(1, self)

    @property
    def alpha(self) -> FieldElem:
        return self.elem(0b10)

    def elements(self):
        return (FieldElem(m, self) for m in range(self.q))

    @cached_property
    def trace_mask(self) -> int:
        """Bit j is T(x^j); the trace of any residue is the parity of ``residue & trace_mask``."""
        mask = 0
        for j in range(self.n):
            if _trace_by_squaring(1 << j, self.modulus.mask, self.n):
                mask |= 1 << j
        return mask


@dataclass(frozen=True)
class FieldElem:
    residue: int
    ctx: FieldCtx

    def _check(self, other: FieldElem):
        if self.ctx.modulus != other.ctx.modulus:
            raise FieldError(
                f"elements of GF(2)[x]/({self.ctx.modulus}) and GF(2)[x]/({other.ctx.modulus}) do not combine"
            )

    def __add__(self, other: FieldElem) -> FieldElem:
        self._check(other)
        return FieldElem(self.residue ^ other.residue, self.ctx)

    __sub__ = __add__

    def __mul__(self, other: FieldElem) -> FieldElem:
        return fe_mul(self, other)

    def __pow__(self, e: int) -> FieldElem:
        return fe_pow(self, e)

    def __bool__(self):
        return self.residue != 0

    @property
    def poly(self) -> Poly2:
        return Poly2(self.residue)

    def __repr__(self):
        return f"FieldElem({str(self.poly)!r} mod {str(self.ctx.modulus)!r})"


def fe_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    a._check(b)
    return FieldElem(_mulmod(a.residue, b.residue, a.ctx.modulus.mask), a.ctx)


def fe_pow(a: FieldElem, e: int) -> FieldElem:
    if e < 0:
        raise FieldError("negative exponent")
    m = a.ctx.modulus.mask
    result, base = _mod(1, m), a.residue
    while e:
        if e & 1:
            result = _mulmod(result, base, m)
        base = _mulmod(base, base, m)
        e >>= 1
    return FieldElem(result, a.ctx)


def _trace_by_squaring(residue: int, m: int, n: int) -> int:
    acc = 0
    y = residue
    for _ in range(n):
        acc ^= y
        y = _mulmod(y, y, m)
    if acc not in (0, 1):
        raise FieldError(f"trace left GF(2): {acc:#x}")
    return acc


def trace(a: FieldElem) -> int:
    t = _trace_by_squaring(a.residue, a.ctx.modulus.mask, a.ctx.n)
    assert t == (a.residue & a.ctx.trace_mask).bit_count() & 1, "trace paths disagree"
    return t


def trace_linear(a: FieldElem) -> int:
    """Trace through the precomputed per-basis table."""
    return (a.residue & a.ctx.trace_mask).bit_count() & 1
