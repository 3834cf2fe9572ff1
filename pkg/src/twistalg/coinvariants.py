"""Coinvariant algebras, restricted Cherednik algebras and their centres.

Polynomials live on the space S of standard monomials, shared by the
commutative algebra S(V) (sign +1) and the skew algebra S_{-1}(V) (sign -1).
Ideals are handled degree by degree as row-reduced spans; a quotient keeps the
monomials that are not pivots, which are the smallest monomials (graded lex,
x_1 > x_2 > ...) completing the ideal to a full basis.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import sympy

from .characters import ClassFunction
from .cherednik import BRAIDED, CherednikAlgebra, CherednikElement, CherednikParams
from .embedding import phi_by_star_words
from .groups import GroupSpec, MonomialMatrix, enumerate_group, generators, sbar, torus_product
from .groups import s as simple_s
from .hopf import GroupAlgebraElement, cocycle_F, group_algebra_module, gz_twist_action
from .linalg import RowSpace, add_into, add_term, nullspace, rank, solve
from .monomials import act_mono, grlex_key, mono_mul, mono_mul_sign, mono_str, monomials_of_degree, unit, zero
from .scalars import Cyclo, CycloContext

Mono = tuple


class DimensionMismatch(RuntimeError):
    """A computed dimension disagrees with the one the theory predicts."""


# -- polynomials -------------------------------------------------------------------------


def _mono_product(a: Mono, b: Mono, sign: int, mutate: str | None = None) -> tuple[Mono, int]:
    if mutate == "opposite" and sign < 0:
        c, _ = mono_mul(a, b, 1)
        return c, mono_mul_sign(b, a)
    return mono_mul(a, b, sign)


@dataclass(eq=False)
class SkewPoly:
    """Sparse polynomial in S(V) (sign +1) or S_{-1}(V) (sign -1)."""

    n: int
    sign: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def monomial(cls, n: int, sign: int, a: Sequence[int], coef=1) -> "SkewPoly":
        return cls(n, sign, {tuple(a): Fraction(coef)})

    @classmethod
    def variable(cls, n: int, sign: int, i: int) -> "SkewPoly":
        return cls.monomial(n, sign, unit(n, i - 1))

    def _same(self, other: "SkewPoly") -> None:
        if other.n != self.n or other.sign != self.sign:
            raise ValueError("polynomials live in different algebras")

    def __add__(self, other):
        self._same(other)
        return SkewPoly(self.n, self.sign, add_into(dict(self.terms), other.terms))

    def __sub__(self, other):
        self._same(other)
        return SkewPoly(self.n, self.sign, add_into(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return SkewPoly(self.n, self.sign, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SkewPoly):
            return skew_mul(self, other)
        return SkewPoly(self.n, self.sign, {k: v * other for k, v in self.terms.items() if v * other})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = SkewPoly.monomial(self.n, self.sign, zero(self.n))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPoly) and (self.n, self.sign) == (other.n, other.sign) and not add_into(
            dict(self.terms), other.terms, -1)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(a) for a in self.terms}

    def act(self, g: MonomialMatrix, dual: bool = False) -> "SkewPoly":
        """g acting by the algebra automorphism extending its action on V (or V*)."""
        return SkewPoly(self.n, self.sign, act_poly(g, self.terms, self.sign, dual))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, key=grlex_key):
            c = self.terms[a]
            m = mono_str(a) or "1"
            parts.append(m if c == 1 else f"{c}*{m}")
        return " + ".join(parts)


def act_poly(g: MonomialMatrix, vec: Mapping[Mono, object], sign: int, dual: bool = False) -> dict:
    zeta = CycloContext(g.N).zeta
    out: dict = {}
    for a, c in vec.items():
        a2, e, s = act_mono(g, a, sign, dual)
        add_term(out, a2, c * s * zeta(e))
    return out


def skew_mul(f: SkewPoly, g: SkewPoly, mutate: str | None = None) -> SkewPoly:
    """Product in S(V) or S_{-1}(V).  ``mutate="opposite"`` uses the opposite skew sign."""
    f._same(g)
    out: dict = {}
    for a, p in f.terms.items():
        for b, q in g.terms.items():
            c, s = _mono_product(a, b, f.sign, mutate)
            add_term(out, c, s * p * q)
    return SkewPoly(f.n, f.sign, out)


def gamma_act(mask: int, vec: Mapping[Mono, object]) -> dict:
    """gamma^mask in T: x_i -> -x_i for each bit i of mask."""
    out = {}
    for a, c in vec.items():
        odd = sum(a[k] for k in range(len(a)) if mask >> k & 1) & 1
        out[a] = -c if odd else c
    return out


# -- invariants and ideals -----------------------------------------------------------------


def generator_degrees(m: int, p: int, n: int) -> list[int]:
    return [k * m for k in range(1, n)] + [n * m // p]


def top_degree(m: int, p: int, n: int) -> int:
    return sum(d - 1 for d in generator_degrees(m, p, n))


def invariant_generators(m: int, p: int, n: int, sign: int = 1) -> list[SkewPoly]:
    """p_k = sum_i x_i^{km} for k < n, and r = (x_1...x_n)^{m/p}."""
    if m % p:
        raise ValueError("p must divide m")
    gens = []
    for k in range(1, n):
        terms = {tuple(k * m if j == i else 0 for j in range(n)): Fraction(1) for i in range(n)}
        gens.append(SkewPoly(n, sign, terms))
    gens.append(SkewPoly.monomial(n, sign, [m // p] * n))
    return gens


def acting_group(m: int, p: int, n: int, sign: int, N: int | None = None) -> GroupSpec:
    """G(m,p,n) on S(V), or mu(G(m,p,n)) on S_{-1}(V)."""
    return GroupSpec(m, p, n, "reflection" if sign > 0 else "mystic", N or m)


def is_invariant(f: SkewPoly, spec: GroupSpec, dual: bool = False) -> bool:
    return all(f.act(g, dual) == f for g in generators(spec))


def graded_ideal(gens: Sequence[SkewPoly], sign: int, D: int, two_sided: bool = False,
                 mutate: str | None = None) -> list[RowSpace]:
    """Row-reduced degree components 0..D of the ideal generated by ``gens``.

    Left multiples M*f already span the two-sided ideal, since M*f*N = +-(M*N')*f
    for monomials; ``two_sided`` spans all M*f*N instead, for cross-checking.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    comps = [RowSpace(key=grlex_key) for _ in range(D + 1)]
    for f in gens:
        degs = f.degrees()
        if len(degs) != 1:
            raise ValueError("generators must be homogeneous")
        df = degs.pop()
        for d in range(df, D + 1):
            for dl in range(d - df + 1):
                if not two_sided and dl != d - df:
                    continue
                for M in monomials_of_degree(n, dl):
                    left = skew_mul(SkewPoly.monomial(n, sign, M), f, mutate)
                    for R in monomials_of_degree(n, d - df - dl):
                        comps[d].add(skew_mul(left, SkewPoly.monomial(n, sign, R), mutate).terms)
    return comps


def same_rowspace(a: RowSpace, b: RowSpace) -> bool:
    """Reduced echelon forms with the same column order are unique."""
    return a.rows == b.rows


def invariant_dimension(spec: GroupSpec, sign: int, d: int) -> int:
    """dim of the degree-d invariants of ``spec`` acting on S(V) or S_{-1}(V)."""
    monos = monomials_of_degree(spec.n, d)
    equations = []
    for g in generators(spec):
        rows: dict = {}
        for a in monos:
            img = act_poly(g, {a: 1}, sign)
            add_term(img, a, -1)
            for b, c in img.items():
                rows.setdefault(b, {})[a] = c
        equations.extend(rows.values())
    return len(nullspace(equations, monos))


def free_algebra_dimension(degrees: Sequence[int], d: int) -> int:
    """Number of monomials of weighted degree d in generators of the given degrees."""
    counts = [1] + [0] * d
    for w in degrees:
        for k in range(w, d + 1):
            counts[k] += counts[k - w]
    return counts[d]


def hilbert_series_check(m: int, p: int, n: int, D: int | None = None) -> bool:
    """Invariant dims of mu(G(m,p,n)) on S_{-1}(V) match a free algebra on the generator degrees."""
    spec = acting_group(m, p, n, -1)
    degs = generator_degrees(m, p, n)
    D = 2 * top_degree(m, p, n) if D is None else D
    return all(invariant_dimension(spec, -1, d) == free_algebra_dimension(degs, d) for d in range(D + 1))


# -- graded quotients -----------------------------------------------------------------------


@dataclass
class GradedQuotient:
    """S/I degree by degree: the ideal components and the complement monomials."""

    n: int
    sign: int
    ideal: list
    basis_by_degree: list
    mutate: str | None = None

    @property
    def top(self) -> int:
        return len(self.basis_by_degree) - 1

    @property
    def graded_dims(self) -> list[int]:
        return [len(b) for b in self.basis_by_degree]

    @property
    def total_dim(self) -> int:
        return sum(self.graded_dims)

    @property
    def basis(self) -> list[Mono]:
        return [a for comp in self.basis_by_degree for a in comp]

    def normal_form(self, vec: Mapping[Mono, object]) -> dict:
        by_degree: dict = {}
        for a, c in vec.items():
            d = sum(a)
            if d <= self.top:
                by_degree.setdefault(d, {})[a] = c
        out: dict = {}
        for d, part in by_degree.items():
            add_into(out, self.ideal[d].reduce(part))
        return out

    def mul(self, u: Mapping[Mono, object], v: Mapping[Mono, object]) -> dict:
        out: dict = {}
        for a, p in u.items():
            for b, q in v.items():
                c, s = _mono_product(a, b, self.sign, self.mutate)
                add_term(out, c, s * p * q)
        return self.normal_form(out)

    def act(self, g: MonomialMatrix, vec: Mapping[Mono, object], dual: bool = False) -> dict:
        return self.normal_form(act_poly(g, vec, self.sign, dual))

    def trace(self, op: Callable[[dict], Mapping]) -> object:
        total = Fraction(0)
        for a in self.basis:
            total = total + op({a: Fraction(1)}).get(a, 0)
        return total

    def matrix(self, op: Callable[[dict], Mapping]) -> dict:
        """{basis element: image} for a linear operator on the quotient."""
        return {a: dict(op({a: Fraction(1)})) for a in self.basis}


def coinvariant_quotient(spec: GroupSpec, sign: int | None = None, mutate: str | None = None) -> GradedQuotient:
    """S_G (reflection flavor) or the skew coinvariant algebra of mu(G) (mystic flavor)."""
    if sign is None:
        sign = -1 if spec.flavor == "mystic" else 1
    m, p, n = spec.m, spec.p, spec.n
    top = top_degree(m, p, n)
    gens = invariant_generators(m, p, n, sign)
    ideal = graded_ideal(gens, sign, top + 1)
    basis = []
    for d in range(top + 2):
        basis.append(tuple(a for a in monomials_of_degree(n, d) if a not in ideal[d].rows))
    if basis[top + 1]:
        raise DimensionMismatch(f"degree {top + 1} of the quotient is not zero")
    q = GradedQuotient(n, sign, ideal[: top + 1], basis[: top + 1], mutate)
    if q.total_dim != spec.order():
        raise DimensionMismatch(f"quotient has dimension {q.total_dim}, group order {spec.order()}")
    return q


def regular_character(spec: GroupSpec) -> ClassFunction:
    order = spec.order()
    return ClassFunction(spec, {g: Fraction(order if g.is_identity() else 0) for g in enumerate_group(spec)})


def coinvariant_character(q: GradedQuotient, spec: GroupSpec) -> ClassFunction:
    values = {}
    for g in enumerate_group(spec):
        values[g] = q.trace(lambda v, g=g: q.act(g, v))
    return ClassFunction(spec, values)


def ideal_is_stable(q: GradedQuotient, spec: GroupSpec) -> bool:
    """Every generator of ``spec`` maps each ideal component into itself."""
    for comp in q.ideal:
        for row in comp.rows.values():
            for g in generators(spec):
                if not comp.contains(act_poly(g, row, q.sign)):
                    return False
    return True


def check_ideal_equality(m: int, p: int, n: int, D: int = 6) -> bool:
    """I_G and I_W agree per degree, and the common space is stable under T."""
    gens_g = invariant_generators(m, p, n, 1)
    gens_w = invariant_generators(m, p, n, -1)
    ig = graded_ideal(gens_g, 1, D)
    iw = graded_ideal(gens_w, -1, D)
    for d in range(D + 1):
        if not same_rowspace(ig[d], iw[d]):
            return False
        for row in ig[d].rows.values():
            for k in range(n):
                if not ig[d].contains(gamma_act(1 << k, row)):
                    return False
    return True


def check_twisted_coinvariant_product(m: int, p: int, n: int, mutate: str | None = None) -> bool:
    """The skew coinvariant product equals the F-twisted product of S_G on all basis pairs."""
    if m % 2:
        raise ValueError("the twist needs m even")
    qg = coinvariant_quotient(GroupSpec(m, p, n, "reflection"))
    qw = coinvariant_quotient(GroupSpec(m, p, n, "mystic"), mutate=mutate)
    if qg.basis_by_degree != qw.basis_by_degree:
        return False
    F = cocycle_F(n)
    for a in qg.basis:
        for b in qg.basis:
            twisted: dict = {}
            for (al, be), f in F.items():
                add_into(twisted, qg.mul(gamma_act(al, {a: 1}), gamma_act(be, {b: 1})), f)
            if add_into(twisted, qw.mul({a: 1}, {b: 1}), -1):
                return False
    return True


# -- traces and the twisted action ---------------------------------------------------------------


def _ga_module_action(q: GradedQuotient):
    def act(g, v):
        return q.act(g, v)

    return act


def twisted_group_action(q: GradedQuotient, spec: GroupSpec, F: Mapping | None = None):
    """(a, v) -> a >_F v for a group element a of ``spec`` acting on the quotient."""
    F = cocycle_F(spec.n) if F is None else F
    return gz_twist_action(_ga_module_action(q), group_algebra_module(spec), gamma_act, F)


def trace_pair(q: GradedQuotient, spec: GroupSpec, a: GroupAlgebraElement, F: Mapping | None = None) -> tuple:
    """(Tr(a >), Tr(a >_F)) on the quotient."""
    twisted = twisted_group_action(q, spec, F)

    def plain(v):
        out: dict = {}
        for g, c in a.terms.items():
            add_into(out, q.act(g, v), c)
        return out

    def tw(v):
        out: dict = {}
        for g, c in a.terms.items():
            add_into(out, twisted(g, v), c)
        return out

    return q.trace(plain), q.trace(tw)


def trace_invariance_check(q: GradedQuotient, spec: GroupSpec, a: GroupAlgebraElement, F: Mapping | None = None) -> bool:
    plain, twisted = trace_pair(q, spec, a, F)
    return plain == twisted


def random_group_algebra_element(spec: GroupSpec, rng: random.Random, terms: int = 4) -> GroupAlgebraElement:
    group = enumerate_group(spec)
    out: dict = {}
    for _ in range(terms):
        add_term(out, rng.choice(group), Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return GroupAlgebraElement(out, spec.n, spec.N)


def phi_map(m: int, p: int, n: int) -> dict:
    """phi: C mu(G(m,p,n)) -> (C G(m,p,n))_F on the group basis."""
    return phi_by_star_words(GroupSpec(m, p, n, "mystic"), GroupSpec(m, p, n, "reflection"))


def reg_char_intertwine_check(m: int, p: int, n: int) -> bool:
    """chi_CG(phi(w)) == chi_CW(w) for every w in W = mu(G(m,p,n))."""
    G = GroupSpec(m, p, n, "reflection")
    order = G.order()
    ident = G.identity()
    for w, img in phi_map(m, p, n).items():
        lhs = order * img.coefficient(ident)
        rhs = order if w.is_identity() else 0
        if lhs != rhs:
            return False
    return True


def check_phi_intertwines_actions(m: int, p: int, n: int) -> bool:
    """w acting on the skew coinvariants equals phi(w) >_F on S_G, for every w."""
    G = GroupSpec(m, p, n, "reflection")
    W = GroupSpec(m, p, n, "mystic")
    qg = coinvariant_quotient(G)
    qw = coinvariant_quotient(W)
    twisted = twisted_group_action(qg, G)
    for w, img in phi_map(m, p, n).items():
        for a in qg.basis:
            lhs = qw.act(w, {a: 1})
            rhs: dict = {}
            for g, c in img.terms.items():
                add_into(rhs, twisted(g, {a: 1}), c)
            if add_into(lhs, rhs, -1):
                return False
    return True


# -- finite-dimensional algebras --------------------------------------------------------------------


class FiniteAlgebra:
    """An algebra with a finite basis and lazily computed structure constants.

    Elements are dicts from basis labels to scalars.
    """

    def __init__(self, labels: Sequence[Hashable], mul_basis: Callable[[Hashable, Hashable], Mapping],
                 one: Mapping, name: str = ""):
        self.labels = list(labels)
        self.index = {b: k for k, b in enumerate(self.labels)}
        self._mul_basis = mul_basis
        self._table: dict = {}
        self.one = dict(one)
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, a: Hashable, b: Hashable) -> dict:
        key = (a, b)
        hit = self._table.get(key)
        if hit is None:
            hit = self._table[key] = dict(self._mul_basis(a, b))
        return hit

    def mul(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for a, p in u.items():
            for b, q in v.items():
                add_into(out, self.product(a, b), p * q)
        return out

    def power(self, u: Mapping, k: int) -> dict:
        out = dict(self.one)
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def commutator(self, u: Mapping, v: Mapping) -> dict:
        return add_into(self.mul(u, v), self.mul(v, u), -1)

    def is_central(self, z: Mapping) -> bool:
        return all(not self.commutator(z, {b: 1}) for b in self.labels)

    def associativity_failures(self, triples: Iterable[tuple] | None = None) -> int:
        if triples is None:
            triples = ((a, b, c) for a in self.labels for b in self.labels for c in self.labels)
        bad = 0
        for a, b, c in triples:
            lhs = self.mul(self.product(a, b), {c: 1})
            rhs = self.mul({a: 1}, self.product(b, c))
            if add_into(lhs, rhs, -1):
                bad += 1
        return bad

    def center(self, gens: Sequence[Mapping] | None = None) -> list[dict]:
        """Basis of the centre: the common kernel of [., b] for b in ``gens`` (default: all basis elements).

        The result is checked against every basis element.
        """
        gens = [{b: 1} for b in self.labels] if gens is None else gens
        equations = []
        for b in gens:
            rows: dict = {}
            for e in self.labels:
                for k, c in self.commutator({e: 1}, b).items():
                    rows.setdefault(k, {})[e] = c
            equations.extend(rows.values())
        basis = nullspace(equations, self.labels)
        for z in basis:
            if not self.is_central(z):
                raise ArithmeticError("centre candidate fails to commute with a basis element")
        return basis

    def minimal_polynomial(self, u: Mapping, max_degree: int | None = None) -> list:
        """Monic minimal polynomial of u, coefficients from constant term upwards."""
        max_degree = self.dim if max_degree is None else max_degree
        powers = [dict(self.one)]
        for k in range(1, max_degree + 1):
            nxt = self.mul(powers[-1], u)
            unknowns = list(range(k))
            equations = []
            for lab in set().union(*powers, nxt):
                equations.append(({j: powers[j].get(lab, 0) for j in unknowns if powers[j].get(lab, 0)}, nxt.get(lab, 0)))
            sol = solve(equations, unknowns)
            if sol is not None:
                return [-sol.get(j, 0) for j in unknowns] + [Fraction(1)]
            powers.append(nxt)
        raise ArithmeticError("no minimal polynomial up to the given degree")

    def span_rank(self, elements: Iterable[Mapping]) -> int:
        return rank(elements)


def polynomial_str(coeffs: Sequence, var: str = "T") -> str:
    T = sympy.Symbol(var)
    expr = sum(sympy.Rational(int(Fraction(c).numerator), int(Fraction(c).denominator)) * T**k for k, c in enumerate(coeffs))
    return str(sympy.expand(expr))


def factor_over_q(coeffs: Sequence) -> list[tuple[list[Fraction], int]]:
    """Irreducible factors over Q of a rational polynomial (coefficients low to high)."""
    T = sympy.Symbol("T")
    expr = sum(sympy.Rational(int(Fraction(c).numerator), int(Fraction(c).denominator)) * T**k for k, c in enumerate(coeffs))
    _, factors = sympy.factor_list(expr, T)
    out = []
    for fac, mult in factors:
        poly = sympy.Poly(fac, T)
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in reversed(poly.all_coeffs())]
        lead = cs[-1]
        out.append(([c / lead for c in cs], int(mult)))
    return out


def split_idempotents(alg: FiniteAlgebra, center_basis: Sequence[Mapping], tries: int = 12) -> list[dict] | None:
    """Primitive idempotents of a commutative split semisimple algebra, or None.

    Looks for a combination u of the basis whose minimal polynomial has
    dim-many distinct rational roots, then interpolates e_k = prod (u - l_j)/(l_k - l_j).
    """
    dim = len(center_basis)
    for t in range(1, tries + 1):
        u: dict = {}
        for k, z in enumerate(center_basis):
            add_into(u, z, Fraction(t) ** k)
        mp = alg.minimal_polynomial(u, dim)
        if len(mp) - 1 < dim:
            continue
        factors = factor_over_q(mp)
        if any(len(f) != 2 or mult != 1 for f, mult in factors):
            return None
        roots = [-f[0] for f, _ in factors]
        idems = []
        for k, lk in enumerate(roots):
            e = dict(alg.one)
            for j, lj in enumerate(roots):
                if j != k:
                    shifted = add_into(dict(u), alg.one, -lj)
                    e = {key: v / (lk - lj) for key, v in alg.mul(e, shifted).items()}
            idems.append(e)
        return idems
    return None


def check_idempotent_splitting(alg: FiniteAlgebra, idems: Sequence[Mapping], center_basis: Sequence[Mapping]) -> bool:
    """Orthogonal idempotents summing to 1, each with e*Z one-dimensional."""
    total: dict = {}
    for k, e in enumerate(idems):
        if not e or alg.mul(e, e) != e:
            return False
        for j, f in enumerate(idems):
            if j != k and alg.mul(e, f):
                return False
        if rank(alg.mul(e, z) for z in center_basis) != 1:
            return False
        add_into(total, e)
    return total == alg.one


# -- restricted Cherednik algebras -------------------------------------------------------------------


class RestrictedAlgebra(FiniteAlgebra):
    """H_{0,c}(G) modulo the invariant ideals on both polynomial sides.

    Basis: (x-coinvariant monomial, group element, y-coinvariant monomial).
    Products are PBW products in the Cherednik algebra followed by reduction
    of the x- and y-parts modulo their ideals.
    """

    def __init__(self, H: CherednikAlgebra, qx: GradedQuotient, qy: GradedQuotient):
        self.H = H
        self.qx = qx
        self.qy = qy
        self.group = enumerate_group(H.spec)
        labels = [(a, g, b) for a in qx.basis for g in self.group for b in qy.basis]
        z = zero(H.n)
        super().__init__(labels, self._mul_words, {(z, H.identity, z): Fraction(1)}, name=H.spec.label())

    def reduce_terms(self, terms: Mapping) -> dict:
        out: dict = {}
        for (a, g, b), c in terms.items():
            xa = self.qx.normal_form({a: 1})
            if not xa:
                continue
            yb = self.qy.normal_form({b: 1})
            for a2, p in xa.items():
                for b2, q in yb.items():
                    add_term(out, (a2, g, b2), c * p * q)
        return out

    def _mul_words(self, w1, w2) -> dict:
        return self.reduce_terms(self.H.mul_words(w1, w2))

    def from_element(self, elem: CherednikElement) -> dict:
        return self.reduce_terms(elem.terms)

    def x(self, i: int) -> dict:
        return self.from_element(self.H.x(i))

    def y(self, i: int) -> dict:
        return self.from_element(self.H.y(i))

    def g(self, h: MonomialMatrix) -> dict:
        return self.from_element(self.H.g(h))

    def scalar(self, c) -> dict:
        return {k: v * c for k, v in self.one.items()} if c else {}

    def generators(self) -> list[dict]:
        out = [self.x(i) for i in range(1, self.H.n + 1)] + [self.y(i) for i in range(1, self.H.n + 1)]
        out += [self.g(h) for h in generators(self.H.spec)]
        return out

    def to_text(self, vec: Mapping) -> str:
        return format_terms(self.H, vec)


def format_terms(H: CherednikAlgebra, vec: Mapping) -> str:
    """Plain-text element syntax, terms in canonical word order."""
    from .cherednik import word_sort_key

    if not vec:
        return "0"
    parts = []
    for w in sorted(vec, key=word_sort_key):
        c = vec[w]
        word = H.word_str(w)
        if isinstance(c, Cyclo) and c.is_rational():
            c = c.to_rational()
        if isinstance(c, Cyclo):
            coef = f"({c})"
            neg = False
        else:
            neg = c < 0
            coef = str(abs(c))
        if word == "1":
            body = coef
        elif coef == "1":
            body = word
        else:
            body = f"{coef}*{word}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def restricted_algebra(spec: GroupSpec, params: CherednikParams, mutate: str | None = None) -> RestrictedAlgebra:
    """The restricted rational (or negative braided, for mystic specs) Cherednik algebra."""
    if params.t:
        raise ValueError("restricted algebras need t = 0")
    if params.flavor == BRAIDED and spec.flavor != "mystic":
        raise ValueError("the braided flavor lives on a mystic group")
    H = CherednikAlgebra(spec, params, mutate=mutate)
    sign = H.sign
    qx = coinvariant_quotient(spec, sign)
    qy = qx  # the invariant ideal on the y side has the same generators
    alg = RestrictedAlgebra(H, qx, qy)
    expected = qx.total_dim * spec.order() * qy.total_dim
    if alg.dim != expected:
        raise DimensionMismatch(f"restricted algebra has dimension {alg.dim}, expected {expected}")
    return alg


def rank_one_algebra(c) -> RestrictedAlgebra:
    """H-bar_c(G(2,1,1)) normalised so that yx = xy - 2cs."""
    spec = GroupSpec(2, 1, 1)
    return restricted_algebra(spec, CherednikParams.make(spec, 0, 0, {1: 2 * Fraction(c)}))


def klein_algebra(c) -> RestrictedAlgebra:
    """H-bar_c(G(2,2,2))."""
    spec = GroupSpec(2, 2, 2)
    return restricted_algebra(spec, CherednikParams.make(spec, 0, Fraction(c)))


def mystic_klein_algebra(c) -> RestrictedAlgebra:
    """The restricted negative braided Cherednik algebra of mu(G(2,2,2)) with parameter c."""
    spec = GroupSpec(2, 2, 2, "mystic")
    return restricted_algebra(spec, CherednikParams.make(spec, 0, Fraction(c), flavor=BRAIDED))


def rank_one_relations(alg: RestrictedAlgebra, c) -> dict[str, bool]:
    """s^2 = 1, sx = -xs, ys = -sy, yx = xy - 2cs, x^2 = y^2 = 0."""
    x, y = alg.x(1), alg.y(1)
    s = alg.g(torus_product(1, 1, 2))
    m = alg.mul
    two_cs = alg.mul(alg.scalar(2 * Fraction(c)), s)
    return {
        "s^2 = 1": m(s, s) == alg.one,
        "sx = -xs": not add_into(m(s, x), m(x, s)),
        "ys = -sy": not add_into(m(y, s), m(s, y)),
        "yx = xy - 2cs": not add_into(add_into(m(y, x), m(x, y), -1), two_cs),
        "x^2 = 0": not m(x, x),
        "y^2 = 0": not m(y, y),
    }


def rank_one_z(alg: RestrictedAlgebra, c) -> dict:
    """z = xy - cs."""
    s = alg.g(torus_product(1, 1, 2))
    return add_into(alg.mul(alg.x(1), alg.y(1)), s, -Fraction(c))


def klein_z(alg: RestrictedAlgebra, c) -> tuple[dict, dict]:
    """z for each A_1 factor of G(2,2,2): roots x_1 - x_2 (reflection s) and x_1 + x_2 (reflection sbar)."""
    x1, x2, y1, y2 = alg.x(1), alg.x(2), alg.y(1), alg.y(2)
    half = Fraction(1, 2)
    out = []
    for sgn, refl in ((-1, simple_s(2, 1, 2)), (1, sbar(2, 1, 2))):
        u = add_into(dict(x1), x2, sgn)
        v = {k: c2 * half for k, c2 in add_into(dict(y1), y2, sgn).items()}
        out.append(add_into(alg.mul(u, v), alg.g(refl), -Fraction(c)))
    return out[0], out[1]


# -- the element gamma ---------------------------------------------------------------------------------

GAMMA_FILE = "gamma_mu_g222.txt"
GAMMA_SHA256 = "54dfa488cb3ab4fceab7c44c934ab3b562be03ea9b9d507896ab9c73b328f65b"


def gamma_text(verify_checksum: bool = True) -> str:
    raw = resources.files("twistalg.data").joinpath(GAMMA_FILE).read_bytes()
    if verify_checksum and hashlib.sha256(raw).hexdigest() != GAMMA_SHA256:
        raise ValueError(f"checksum mismatch for {GAMMA_FILE}")
    lines = [ln for ln in raw.decode().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return " ".join(lines)


def gamma_element(alg: RestrictedAlgebra, c) -> dict:
    """The transcribed element gamma, with sigma = sigma_12 and the scalar c."""
    from .syntax import parse_element

    H = alg.H
    names = {"c": Fraction(c), "sigma": gen_sigma_12(H.N)}
    return alg.from_element(parse_element(H, gamma_text(), names))


def gen_sigma_12(N: int = 2) -> MonomialMatrix:
    from .groups import sigma

    return sigma(2, 1, N)


def is_scalar(alg: FiniteAlgebra, u: Mapping) -> bool:
    """rank of {u, 1} is one."""
    return rank([u, alg.one]) == 1 if u else True


@dataclass
class WitnessReport:
    ok: bool
    rows: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": self.rows}


def verify_not_isom_witness(c=1) -> WitnessReport:
    """z in the rank-one algebra, gamma in the mystic Klein algebra, and the split centre of the Klein algebra.

    Each row is one claim.  The minimal-polynomial row asserts T^4 - c^4; the
    computed polynomial is reported in its details either way.
    """
    c = Fraction(c)
    rows = []

    def row(name, ok, details=""):
        rows.append({"check": name, "status": "pass" if ok else "fail", "details": details})

    A = rank_one_algebra(c)
    z = rank_one_z(A, c)
    row("z = xy - cs is central in the rank-one restricted algebra", A.is_central(z), A.to_text(z))
    row("z^2 = c^2", A.mul(z, z) == A.scalar(c * c), A.to_text(A.mul(z, z)))

    B = mystic_klein_algebra(c)
    gamma = gamma_element(B, c)
    row("gamma is central in the restricted braided algebra of mu(G(2,2,2))", B.is_central(gamma))
    g2 = B.mul(gamma, gamma)
    row("gamma^2 is not a scalar", not is_scalar(B, g2), f"rank of (gamma^2, 1) = {rank([g2, B.one])}")
    g4 = B.mul(g2, g2)
    row("gamma^4 = c^4", g4 == B.scalar(c**4), B.to_text(g4))
    order4 = g4 == B.one and not is_scalar(B, g2)
    row("gamma is a central unit of multiplicative order 4", order4)

    C = klein_algebra(c)
    Z = C.center(C.generators())
    row("dim Z of the Klein restricted algebra is 4", len(Z) == 4, str(len(Z)))
    idems = split_idempotents(C, Z)
    split = idems is not None and len(idems) == len(Z) and check_idempotent_splitting(C, idems, Z)
    row("the centre of the Klein restricted algebra splits into rank-one idempotents over Q", split,
        f"{len(idems or [])} idempotents")

    mp = B.minimal_polynomial(gamma, 8)
    factors = " * ".join(f"({polynomial_str(f)})" for f, _ in factor_over_q(mp))
    row("minimal polynomial of gamma is T^4 - c^4", mp == [-(c**4), 0, 0, 0, Fraction(1)],
        f"computed {polynomial_str(mp)} = {factors}")
    return WitnessReport(all(r["status"] == "pass" for r in rows), rows)


# -- the even case: eta is an isomorphism -------------------------------------------------------------


def t_act_label(H: CherednikAlgebra, mask: int, vec: Mapping) -> dict:
    out: dict = {}
    for w, c in vec.items():
        w2, s = H.t_act_basis(mask, w)
        add_term(out, w2, c * s)
    return out


def twisted_mul(alg: RestrictedAlgebra, u: Mapping, v: Mapping, F: Mapping) -> dict:
    """u * v = sum F (gamma^al > u)(gamma^be > v)."""
    out: dict = {}
    for (al, be), f in F.items():
        add_into(out, alg.mul(t_act_label(alg.H, al, u), t_act_label(alg.H, be, v)), f)
    return out


def _eigen_generators(alg: RestrictedAlgebra) -> list[dict]:
    """Generators that are T-eigenvectors: x_i, y_i, diagonal generators, s +- s^t."""
    H = alg.H
    out = [alg.x(i) for i in range(1, H.n + 1)] + [alg.y(i) for i in range(1, H.n + 1)]
    for h in generators(H.spec):
        if h.is_diagonal():
            out.append(alg.g(h))
            continue
        conj = {}
        for mask in range(1 << H.n):
            conj[mask] = t_act_label(H, mask, alg.g(h))
        span = RowSpace()
        for mask, v in conj.items():
            if span.add(v):
                out.append(v)
    return out


def eta_restricted(alg: RestrictedAlgebra, u: Mapping, F: Mapping, mutate: str | None = None) -> dict:
    """eta(u) = sum F (gamma^al > u) t^be; ``mutate="sign"`` flips the gamma x gamma terms of F."""
    H = alg.H
    z = zero(H.n)
    out: dict = {}
    for (al, be), f in F.items():
        if mutate == "sign" and al and be:
            f = -f
        tb = {(z, torus_product(H.n, be, H.N), z): Fraction(1)}
        add_into(out, alg.mul(t_act_label(H, al, u), tb), f)
    return out


def check_restricted_iso_even_case(m: int, p: int, n: int, c=1, mutate: str | None = None) -> bool:
    """eta: (H-bar_c)_F -> H-bar_c is multiplicative and bijective when m/p is even.

    Multiplicativity is checked as eta(g * b) = eta(g) eta(b) for T-eigen
    generators g and every basis element b; since eta(1) = 1 this extends to
    all products by induction on word length.
    """
    if (m // p) % 2:
        raise ValueError("needs m/p even")
    spec = GroupSpec(m, p, n)
    cz = {k: Fraction(c) for k in _zeta_keys(spec)}
    alg = restricted_algebra(spec, CherednikParams.make(spec, 0, Fraction(c), cz))
    F = cocycle_F(n)
    if eta_restricted(alg, alg.one, F, mutate) != alg.one:
        return False
    images = {b: eta_restricted(alg, {b: 1}, F, mutate) for b in alg.labels}
    for gvec in _eigen_generators(alg):
        eg = eta_restricted(alg, gvec, F, mutate)
        for b in alg.labels:
            lhs = eta_restricted(alg, twisted_mul(alg, gvec, {b: 1}, F), F, mutate)
            if add_into(lhs, alg.mul(eg, images[b]), -1):
                return False
    return rank(images.values()) == alg.dim


def _zeta_keys(spec: GroupSpec) -> list[int]:
    from .cherednik import zeta_keys

    return zeta_keys(spec)


# -- phi on restricted algebras ------------------------------------------------------------------------


def check_restricted_twist(m: int, p: int, n: int, c=1, braided_c=None) -> bool:
    """phi: restricted braided algebra of mu(G) with parameter -c -> (H-bar_c(G))_F is an isomorphism.

    phi fixes x and y and sends w to its star-word image; it is checked on
    generators times basis elements, plus bijectivity.  ``braided_c``
    overrides the braided parameter.
    """
    c = Fraction(c)
    G = GroupSpec(m, p, n)
    W = GroupSpec(m, p, n, "mystic")
    cz = {k: c for k in _zeta_keys(G)}
    R = restricted_algebra(G, CherednikParams.make(G, 0, c, cz))
    bc = -c if braided_c is None else Fraction(braided_c)
    B = restricted_algebra(W, CherednikParams.make(W, 0, bc, {k: -v for k, v in cz.items()}, BRAIDED))
    F = cocycle_F(n)
    phi_g = phi_map(m, p, n)
    z = zero(n)

    def star(u, v):
        return twisted_mul(R, u, v, F)

    def phi_label(label):
        a, w, b = label
        out = {(a, G.identity(), z): Fraction(1)}
        out = star(out, {(z, h, z): cf for h, cf in phi_g[w].terms.items()})
        return star(out, {(z, G.identity(), b): Fraction(1)})

    images = {lab: phi_label(lab) for lab in B.labels}

    def phi(vec):
        out: dict = {}
        for lab, cf in vec.items():
            add_into(out, images[lab], cf)
        return out

    if phi(B.one) != R.one:
        return False
    for gvec in B.generators():
        pg = phi(gvec)
        for lab in B.labels:
            if add_into(phi(B.mul(gvec, {lab: 1})), star(pg, images[lab]), -1):
                return False
    return rank(images.values()) == R.dim
