"""Exact arithmetic in Q and in cyclotomic fields Q(zeta_m).

Elements of Q(zeta_m) are stored as coefficient vectors of polynomials in
Q[x]/(Phi_m), where x stands for zeta_m = exp(2*pi*i/m).  Rationals are plain
:class:`fractions.Fraction` values and mix freely with field elements.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

__all__ = [
    "ContextMismatch",
    "CycloContext",
    "Cyclo",
    "cyclotomic_polynomial",
    "root_of_unity",
    "as_scalar",
    "parse_rational",
    "scalar_to_json",
    "scalar_from_json",
]


class ContextMismatch(ValueError):
    """Raised when elements of two different cyclotomic fields are combined."""


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den must be monic
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    dl = len(den) - 1
    for k in range(len(num) - 1, dl - 1, -1):
        q = num[k]
        if q:
            out[k - dl] = q
            for j, d in enumerate(den):
                num[k - dl + j] -= q * d
    rem = num[:dl] if dl else []
    return out, rem


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(_cyclotomic(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def cyclotomic_polynomial(m: int) -> list[int]:
    """Integer coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_polynomial(4)
    [1, 0, 1]
    """
    if m < 1:
        raise ValueError("cyclotomic_polynomial needs m >= 1")
    return list(_cyclotomic(m))


class CycloContext:
    """The field Q(zeta_m), represented as Q[x]/(Phi_m).

    Contexts are interned: ``CycloContext(4) is CycloContext(4)``.
    """

    _cache: dict[int, "CycloContext"] = {}

    def __new__(cls, m: int) -> "CycloContext":
        if m < 1:
            raise ValueError("conductor must be positive")
        ctx = cls._cache.get(m)
        if ctx is None:
            ctx = super().__new__(cls)
            ctx.m = m
            ctx.modulus = tuple(_cyclotomic(m))
            ctx.degree = len(ctx.modulus) - 1
            # x^k mod Phi_m for 0 <= k < 2*degree - 1
            d = ctx.degree
            table = []
            for k in range(max(2 * d - 1, 1)):
                mono = [0] * k + [1]
                if k >= d:
                    _, rem = _poly_divmod_int(mono, list(ctx.modulus))
                    mono = rem
                mono = mono + [0] * (d - len(mono))
                table.append(tuple(mono[:d]))
            ctx._reduce = tuple(table)
            cls._cache[m] = ctx
        return ctx

    def __getnewargs__(self):
        return (self.m,)

    def __repr__(self) -> str:
        return f"CycloContext({self.m})"

    def zero(self) -> "Cyclo":
        return Cyclo(self, (Fraction(0),) * self.degree)

    def one(self) -> "Cyclo":
        return self.from_rational(1)

    def from_rational(self, q) -> "Cyclo":
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(q)
        return Cyclo(self, tuple(coeffs))

    def root(self, k: int) -> "Cyclo":
        return root_of_unity(self, k)

    def zeta(self, k: int):
        """zeta_m ** k as a Fraction when the field is Q, else as a Cyclo."""
        if self.degree == 1:
            # Q(zeta_1) = Q(zeta_2) = Q
            return Fraction(-1) if self.m == 2 and k % 2 else Fraction(1)
        return root_of_unity(self, k)

    def coerce(self, value):
        """Like ``__call__`` but keeps rationals as Fractions when the field is Q."""
        if self.degree == 1:
            if isinstance(value, Cyclo):
                _check_ctx(self, value.ctx)
                return value.coeffs[0]
            return Fraction(value)
        return self(value)

    def __call__(self, value) -> "Cyclo":
        if isinstance(value, Cyclo):
            _check_ctx(self, value.ctx)
            return value
        return self.from_rational(value)


def _check_ctx(a: CycloContext, b: CycloContext) -> None:
    if a is not b:
        raise ContextMismatch(f"cannot combine elements of Q(zeta_{a.m}) and Q(zeta_{b.m})")


@lru_cache(maxsize=None)
def _root_coeffs(m: int, k: int) -> tuple[Fraction, ...]:
    ctx = CycloContext(m)
    k %= m
    d = ctx.degree
    # x^k reduced; k may exceed the precomputed table so reduce directly
    mono = [0] * k + [1]
    if k >= d:
        _, mono = _poly_divmod_int(mono, list(ctx.modulus))
    mono = list(mono) + [0] * (d - len(mono))
    return tuple(Fraction(c) for c in mono[:d])


def root_of_unity(ctx: CycloContext, k: int) -> "Cyclo":
    """Return zeta_m ** k in ``ctx`` (k is taken mod m)."""
    return Cyclo(ctx, _root_coeffs(ctx.m, k))


class Cyclo:
    """An element of Q(zeta_m).  Immutable."""

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx: CycloContext, coeffs: Sequence[Fraction]):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        self._hash = None
        if len(self.coeffs) != ctx.degree:
            raise ValueError("coefficient vector has wrong length")

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other) -> "Cyclo | None":
        if isinstance(other, Cyclo):
            _check_ctx(self.ctx, other.ctx)
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            return self.ctx.from_rational(other)
        return None

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ctx, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            return Cyclo(self.ctx, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ctx.degree
        if d == 1:
            return Cyclo(self.ctx, (self.coeffs[0] * o.coeffs[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:d])
        table = self.ctx._reduce
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(table[k]):
                    if r:
                        out[j] += c * r
        return Cyclo(self.ctx, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.ctx.m)
        d = self.ctx.degree
        if d == 1:
            return Cyclo(self.ctx, (1 / self.coeffs[0],))
        # extended Euclid: find s with s*a = 1 mod Phi_m
        r0 = [Fraction(c) for c in self.ctx.modulus]
        r1 = _trim(list(self.coeffs))
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant
        inv = [c / r1[0] for c in s1]
        inv = _poly_mod(inv, [Fraction(c) for c in self.ctx.modulus])
        inv = inv + [Fraction(0)] * (d - len(inv))
        return Cyclo(self.ctx, tuple(inv[:d]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclo":
        """Complex conjugation, the automorphism zeta -> zeta^-1."""
        out = self.ctx.zero()
        for k, a in enumerate(self.coeffs):
            if a:
                out = out + root_of_unity(self.ctx, -k) * a
        return out

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclo):
            return self.ctx is other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.ctx.m, self.coeffs))
        return self._hash

    # -- display ------------------------------------------------------------
    def approx(self) -> complex:
        """Complex approximation, for human inspection only (not exact)."""
        z = cmath.exp(2j * cmath.pi / self.ctx.m)
        return sum(float(a) * z**k for k, a in enumerate(self.coeffs))

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(a))
            elif a == 1:
                parts.append(mono)
            elif a == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{a}*{mono}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def __repr__(self) -> str:
        return f"Cyclo(m={self.ctx.m}, {[str(c) for c in self.coeffs]})"


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_divmod_q(num: list[Fraction], den: list[Fraction]):
    num = _trim(list(num))
    den = _trim(list(den))
    if len(num) < len(den):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    rem = _trim(num[: len(den) - 1] or [Fraction(0)])
    return _trim(q), rem


def _poly_mod(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    return _poly_divmod_q(a, mod)[1]


Scalar = Union[int, Fraction, Cyclo]


def as_scalar(value, ctx: CycloContext | None = None):
    """Coerce ``value`` into ``ctx`` (or to a Fraction when ``ctx`` is None)."""
    if ctx is None:
        if isinstance(value, Cyclo):
            return value
        return Fraction(value)
    return ctx(value)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def scalar_to_json(value, m: int | None = None) -> dict:
    """Serialise a scalar as ``{"m": m, "coeffs": ["p/q", ...]}``."""
    if isinstance(value, Cyclo):
        return {"m": value.ctx.m, "coeffs": [str(c) for c in value.coeffs]}
    m = m or 1
    ctx = CycloContext(m)
    return scalar_to_json(ctx(value))


def scalar_from_json(data: dict) -> Cyclo:
    ctx = CycloContext(int(data["m"]))
    coeffs = [Fraction(c) for c in data["coeffs"]]
    return Cyclo(ctx, coeffs)


def rational_vector(values: Iterable) -> list[Fraction]:
    return [Fraction(v) for v in values]
