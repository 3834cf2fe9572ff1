"""Rational and negative braided Cherednik algebras in PBW normal form.

A normal word ``(a, g, b)`` stands for x^a g y^b with x^a = x_1^{a_1}...x_n^{a_n}
and y^b likewise.  Products are computed by straightening y^b x^a one y-letter
at a time using the defining relations; every correction term has strictly
smaller total degree, so the recursion terminates.  Results of y^b x^a are
memoised per algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .groups import GroupSpec, MonomialMatrix, gen_s, gen_sigma, gen_t, is_member, torus_product
from .hopf import ModuleAlgebra
from .linalg import add_into, add_term
from .monomials import act_mono, mono_mul, mono_str, unit, zero

RATIONAL = "rational"
BRAIDED = "negative-braided"

Word = tuple  # (a, g, b)


@dataclass(frozen=True)
class CherednikParams:
    """Parameters t, c_1 and c_zeta (zeta = zeta_N^k keyed by k) of a Cherednik algebra."""

    t: object = 0
    c1: object = 0
    c_zeta: tuple = ()
    flavor: str = RATIONAL

    @classmethod
    def make(cls, spec: GroupSpec, t=0, c1=0, c_zeta: Mapping[int, object] | None = None, flavor: str = RATIONAL):
        """Fill c_zeta with zeros on C_{m/p} minus {1}; reject keys outside it."""
        keys = zeta_keys(spec)
        given = dict(c_zeta or {})
        extra = set(given) - set(keys)
        if extra:
            raise ValueError(f"c_zeta keys {sorted(extra)} are not nontrivial (m/p)-th roots")
        return cls(t, c1, tuple((k, given.get(k, 0)) for k in keys), flavor)

    def c_zeta_dict(self) -> dict[int, object]:
        return dict(self.c_zeta)

    def with_flavor(self, flavor: str) -> "CherednikParams":
        return CherednikParams(self.t, self.c1, self.c_zeta, flavor)


def zeta_keys(spec: GroupSpec) -> list[int]:
    """Exponents k with zeta_N^k running over C_{m/p} minus {1}."""
    q = spec.q
    step = spec.N // q
    return [j * step for j in range(1, q)]


def root_exps(spec: GroupSpec) -> list[int]:
    """Exponents of the elements of C_m inside zeta_N."""
    step = spec.N // spec.m
    return list(range(0, spec.N, step))


class CherednikAlgebra:
    """H_{t,c}(G) (flavor rational) or the negative braided analogue for mu(G).

    ``mutate`` perturbs the relations for mutation testing: "cross-sign"
    flips the sign of the c_1 term in the y_i x_j relation (i != j) and
    "diag-sign" flips the sign of the c_1 sum in the y_i x_i relation.
    """

    def __init__(self, spec: GroupSpec, params: CherednikParams, mutate: str | None = None):
        self.spec = spec
        self.params = params
        self.flavor = params.flavor
        self.sign = 1 if params.flavor == RATIONAL else -1
        self.n = spec.n
        self.N = spec.N
        self.ctx = spec.ctx
        self.mutate = mutate
        keys = zeta_keys(spec)
        if sorted(k for k, _ in params.c_zeta) != keys:
            raise ValueError("c_zeta must be keyed exactly by the nontrivial (m/p)-th roots of unity")
        self.identity = spec.identity()
        self._corr = self._build_corrections()
        self._ycache: dict = {}
        self._scache: dict = {}

    # -- relations ----------------------------------------------------------------
    def _build_corrections(self):
        """corr[i][j]: group algebra element C with y_i x_j = (+-) x_j y_i + C."""
        spec, n, N = self.spec, self.n, self.N
        zeta = self.ctx.zeta
        c1 = self.params.c1
        braided = self.flavor == BRAIDED
        refl = gen_sigma if braided else gen_s
        cross_sign = -1 if self.mutate == "cross-sign" else 1
        corr = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                out: dict = {}
                if i != j:
                    for e in root_exps(spec):
                        add_term(out, refl(n, i + 1, j + 1, N, e), cross_sign * c1 * zeta(e))
                else:
                    add_term(out, self.identity, self.params.t)
                    diag_sign = 1 if braided else -1
                    flip = -1 if self.mutate == "diag-sign" else 1
                    for k in range(n):
                        if k != i:
                            for e in root_exps(spec):
                                add_term(out, refl(n, i + 1, k + 1, N, e), flip * diag_sign * c1)
                    for k, cz in self.params.c_zeta:
                        add_term(out, gen_t(n, i + 1, N, k), diag_sign * cz)
                for g in out:
                    if not is_member(g, spec):
                        raise ValueError(f"relation term {g} is outside {spec.label()}")
                corr[i][j] = tuple(out.items())
        return corr

    def correction(self, i: int, j: int) -> dict:
        return dict(self._corr[i][j])

    # -- element constructors --------------------------------------------------
    def zero_mono(self):
        return zero(self.n)

    def word(self, a=None, g: MonomialMatrix | None = None, b=None) -> Word:
        return (tuple(a) if a is not None else zero(self.n), g if g is not None else self.identity, tuple(b) if b is not None else zero(self.n))

    def elem(self, terms: Mapping[Word, object] | None = None) -> "CherednikElement":
        return CherednikElement(self, dict(terms or {}))

    def one(self) -> "CherednikElement":
        return self.elem({self.word(): Fraction(1)})

    def scalar(self, c) -> "CherednikElement":
        return self.elem({self.word(): c})

    def x(self, i: int) -> "CherednikElement":
        """x_i, 1-based."""
        return self.elem({(unit(self.n, i - 1), self.identity, zero(self.n)): Fraction(1)})

    def y(self, i: int) -> "CherednikElement":
        return self.elem({(zero(self.n), self.identity, unit(self.n, i - 1)): Fraction(1)})

    def g(self, h: MonomialMatrix) -> "CherednikElement":
        if not is_member(h, self.spec):
            raise ValueError(f"{h} is not in {self.spec.label()}")
        return self.elem({(zero(self.n), h, zero(self.n)): Fraction(1)})

    def group_element(self, terms: Mapping[MonomialMatrix, object]) -> "CherednikElement":
        z = zero(self.n)
        return self.elem({(z, h, z): c for h, c in terms.items()})

    # -- straightening -----------------------------------------------------------
    def y_times_x(self, i: int, a: tuple) -> dict:
        """Normal form of y_i * x^a (0-based i)."""
        key = (i, a)
        hit = self._ycache.get(key)
        if hit is not None:
            return hit
        n, sign, zeta = self.n, self.sign, self.ctx.zeta
        out: dict = {}
        letters = [k for k in range(n) for _ in range(a[k])]
        pref = 1
        prefix = [0] * n
        rest = list(a)
        for j in letters:
            rest[j] -= 1
            q = tuple(rest)
            p = tuple(prefix)
            for h, c in self._corr[i][j]:
                hq, e, s1 = act_mono(h, q, sign)
                mono, s2 = mono_mul(p, hq, sign)
                add_term(out, (mono, h, zero(n)), pref * s1 * s2 * c * zeta(e))
            if i != j:
                pref *= sign
            prefix[j] += 1
        add_term(out, (tuple(a), self.identity, unit(n, i)), Fraction(pref))
        self._ycache[key] = out
        return out

    def straighten(self, b: tuple, a: tuple) -> dict:
        """Normal form of y^b * x^a."""
        key = (b, a)
        hit = self._scache.get(key)
        if hit is not None:
            return hit
        n = self.n
        if not any(b):
            out = {(a, self.identity, zero(n)): Fraction(1)}
        elif not any(a):
            out = {(a, self.identity, b): Fraction(1)}
        else:
            k = max(idx for idx in range(n) if b[idx])
            rest = list(b)
            rest[k] -= 1
            rest = tuple(rest)
            out = {}
            for (a1, h, b1), c in self.y_times_x(k, a).items():
                for (a2, h2, b2), c2 in self.straighten(rest, a1).items():
                    word, s = self._append_gy((a2, h2, b2), h, b1)
                    add_term(out, word, c * c2 * s)
        self._scache[key] = out
        return out

    def _append_gy(self, word: Word, h: MonomialMatrix, b1: tuple):
        """(x^a2 h2 y^b2) * h * y^b1 as (normal word, scalar)."""
        a2, h2, b2 = word
        if any(b2):
            hb, e, s1 = act_mono(h.inverse(), b2, self.sign, dual=True)
            b3, s2 = mono_mul(hb, b1, self.sign)
            return (a2, h2 * h, b3), s1 * s2 * self.ctx.zeta(e)
        return (a2, h2 * h, b1), 1

    def mul_words(self, w1: Word, w2: Word) -> dict:
        a1, g1, b1 = w1
        a2, g2, b2 = w2
        sign, zeta = self.sign, self.ctx.zeta
        out: dict = {}
        g2inv = g2.inverse() if any(b1) or any(b2) else None
        for (a3, h, b3), c in self.straighten(b1, a2).items():
            ga, e1, s1 = act_mono(g1, a3, sign)
            a4, s2 = mono_mul(a1, ga, sign)
            if any(b3):
                gb, e2, s3 = act_mono(g2inv, b3, sign, dual=True)
                b4, s4 = mono_mul(gb, b2, sign)
            else:
                b4, e2, s3, s4 = b2, 0, 1, 1
            add_term(out, (a4, g1 * h * g2, b4), c * s1 * s2 * s3 * s4 * zeta(e1 + e2))
        return out

    def mul(self, x: Mapping[Word, object], y: Mapping[Word, object]) -> dict:
        out: dict = {}
        for w1, p in x.items():
            for w2, q in y.items():
                add_into(out, self.mul_words(w1, w2), p * q)
        return out

    def normalize(self, letters: Iterable) -> "CherednikElement":
        """Normal form of a product of letters ('x', i), ('y', i), ('g', h) or scalars."""
        acc = self.one()
        for letter in letters:
            if isinstance(letter, tuple):
                kind, val = letter
                if kind == "x":
                    acc = acc * self.x(val)
                elif kind == "y":
                    acc = acc * self.y(val)
                elif kind == "g":
                    acc = acc * self.g(val)
                else:
                    raise ValueError(f"unknown letter {letter!r}")
            else:
                acc = acc * letter
        return acc

    # -- T-module algebra structure (m even) --------------------------------------
    def t_act_basis(self, mask: int, word: Word):
        a, g, b = word
        tm = torus_product(self.n, mask, self.N)
        parity = sum(a[k] + b[k] for k in range(self.n) if mask >> k & 1)
        return (a, tm * g * tm, b), (-1 if parity & 1 else 1)

    def module_algebra(self) -> ModuleAlgebra:
        """H as a kT-module algebra; u is set when the torus T lies in the group."""
        n, N = self.n, self.N
        z = zero(n)
        adjoint = all(is_member(torus_product(n, 1 << k, N), self.spec) for k in range(n))

        def u(mask):
            return {(z, torus_product(n, mask, N), z): Fraction(1)}

        return ModuleAlgebra(n, self.mul_words, self.t_act_basis, self.word(), u=u if adjoint else None)

    # -- display -------------------------------------------------------------------
    def word_str(self, w: Word) -> str:
        a, g, b = w
        parts = [p for p in (mono_str(a, "x"), "" if g.is_identity() else g.token(), mono_str(b, "y")) if p]
        return "*".join(parts) or "1"


@dataclass(eq=False)
class CherednikElement:
    algebra: CherednikAlgebra
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def _wrap(self, terms) -> "CherednikElement":
        return CherednikElement(self.algebra, terms)

    def _coerce(self, other) -> "CherednikElement":
        if isinstance(other, CherednikElement):
            if other.algebra is not self.algebra:
                raise ValueError("elements of different algebras")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        return self._wrap(add_into(dict(self.terms), self._coerce(other).terms))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(add_into(dict(self.terms), self._coerce(other).terms, -1))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self._wrap({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, CherednikElement):
            return self._wrap(self.algebra.mul(self.terms, self._coerce(other).terms))
        return self._wrap({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        return self._wrap({w: other * c for w, c in self.terms.items()})

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        return not add_into(dict(self.terms), other.terms, -1)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word):
        return self.terms.get(word, 0)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        items = sorted(self.terms.items(), key=lambda kv: word_sort_key(kv[0]))
        return " + ".join(f"({c})*{alg.word_str(w)}" for w, c in items)


def word_sort_key(w: Word):
    a, g, b = w
    return (sum(a) + sum(b), a, g.sort_key(), b)


def generator_elements(H: CherednikAlgebra) -> list[CherednikElement]:
    from .groups import generators

    n = H.n
    return [H.x(i) for i in range(1, n + 1)] + [H.y(i) for i in range(1, n + 1)] + [H.g(g) for g in generators(H.spec)]


def associativity_failures(H: CherednikAlgebra, elements: list[CherednikElement] | None = None) -> list[tuple[int, int, int]]:
    """Index triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
    elements = elements if elements is not None else generator_elements(H)
    bad = []
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            ab = a * b
            for k, c in enumerate(elements):
                if ab * c != a * (b * c):
                    bad.append((i, j, k))
    return bad


def pbw_dimension_table(H: CherednikAlgebra, max_degree: int) -> list[tuple[int, int, int]]:
    """[(d, rank of products x^a g y^b with |a|+|b| = d, dim S^i(V) * |G| * dim S^(d-i)(V*) summed)].

    The products are formed with ``mul`` from single letters, so the rank
    counts the distinct normal words the rewriting produces in each degree.
    """
    from math import comb

    from .groups import enumerate_group
    from .linalg import RowSpace
    from .monomials import monomials_of_degree

    n = H.n
    group = enumerate_group(H.spec)

    def dim_sym(d):
        return comb(n + d - 1, d)

    out = []
    for d in range(max_degree + 1):
        rs = RowSpace()
        for i in range(d + 1):
            for a in monomials_of_degree(n, i):
                xa = H.one()
                for k, e in enumerate(a):
                    for _ in range(e):
                        xa = xa * H.x(k + 1)
                for b in monomials_of_degree(n, d - i):
                    yb = H.one()
                    for k, e in enumerate(b):
                        for _ in range(e):
                            yb = yb * H.y(k + 1)
                    for g in group:
                        rs.add((xa * H.g(g) * yb).terms)
        formula = sum(dim_sym(i) * len(group) * dim_sym(d - i) for i in range(d + 1))
        out.append((d, rs.rank, formula))
    return out
