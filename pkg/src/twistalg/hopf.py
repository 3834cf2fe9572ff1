"""Group algebras, the Hopf algebra kT for T = (C_2)^n, its cocycle F, and twists.

Elements of T are bitmasks: bit k stands for the generator gamma_{k+1}.  A
kT element is a dict mask -> scalar, a tensor is a dict (mask, mask) -> scalar.
kT is commutative and cocommutative, every element of T is its own inverse,
so Sweedler sums reduce to finite sums over masks.

Module algebras are described by :class:`ModuleAlgebra`: a product on basis
elements and a T-action that sends each basis element to a scalar multiple of
another basis element.  Twisting is generic over this interface and is used
for group algebras, polynomial algebras, coinvariant algebras and Cherednik
algebras alike.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping

from .groups import GroupSpec, MonomialMatrix, enumerate_group, inversions, is_member, torus_product
from .linalg import add_into, add_term
from .scalars import CycloContext

HALF = Fraction(1, 2)


# -- group algebras -------------------------------------------------------------


class GroupAlgebraElement:
    """Finite sparse combination of monomial matrices with scalar coefficients."""

    __slots__ = ("terms", "n", "N")

    def __init__(self, terms: Mapping[MonomialMatrix, object], n: int, N: int):
        self.terms = {g: c for g, c in terms.items() if c}
        self.n = n
        self.N = N

    @classmethod
    def basis(cls, g: MonomialMatrix, coef=1) -> "GroupAlgebraElement":
        return cls({g: coef}, g.n, g.N)

    @classmethod
    def zero(cls, n: int, N: int) -> "GroupAlgebraElement":
        return cls({}, n, N)

    @classmethod
    def one(cls, n: int, N: int) -> "GroupAlgebraElement":
        return cls({MonomialMatrix.identity(n, N): Fraction(1)}, n, N)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n or self.N != other.N:
            raise ValueError("group algebra elements of different groups")

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        return GroupAlgebraElement(add_into(dict(self.terms), other.terms), self.n, self.N)

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(add_into(dict(self.terms), other.terms, -1), self.n, self.N)

    def __neg__(self):
        return GroupAlgebraElement({g: -c for g, c in self.terms.items()}, self.n, self.N)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_mul(self, other)
        return GroupAlgebraElement({g: c * other for g, c in self.terms.items()}, self.n, self.N)

    def __rmul__(self, other):
        return GroupAlgebraElement({g: other * c for g, c in self.terms.items()}, self.n, self.N)

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self.N == other.N and not add_into(dict(self.terms), other.terms, -1)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, g: MonomialMatrix):
        return self.terms.get(g, 0)

    def members_of(self, spec: GroupSpec) -> bool:
        return all(is_member(g, spec) for g in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{g.token()}" for g, c in sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._check(b)
    out: dict = {}
    for g, x in a.terms.items():
        for h, y in b.terms.items():
            add_term(out, g * h, x * y)
    return GroupAlgebraElement(out, a.n, a.N)


def augmentation(a: GroupAlgebraElement):
    return sum(a.terms.values(), Fraction(0))


def ga_from_torus(kt: Mapping[int, object], n: int, N: int, left: MonomialMatrix | None = None) -> GroupAlgebraElement:
    """The group algebra element sum_mask c * left * t^mask."""
    out: dict = {}
    for mask, c in kt.items():
        g = torus_product(n, mask, N)
        add_term(out, left * g if left is not None else g, c)
    return GroupAlgebraElement(out, n, N)


# -- the maps J_c ---------------------------------------------------------------


def _j_factor(c, i: int, j: int) -> dict[int, object]:
    ci = 1 / c
    a = (c + ci) / 4
    return {
        0: a,
        (1 << i) | (1 << j): -a,
        1 << i: (c - ci + 2) / 4,
        1 << j: (ci - c + 2) / 4,
    }


def kt_mul(a: Mapping[int, object], b: Mapping[int, object]) -> dict[int, object]:
    out: dict = {}
    for x, p in a.items():
        for y, q in b.items():
            add_term(out, x ^ y, p * q)
    return out


def j_map_element(c, g: MonomialMatrix) -> GroupAlgebraElement:
    """J_c(w t) = w t prod over inversions (i<j, w(i)>w(j)) of the quarter factor."""
    factor: dict = {0: Fraction(1)}
    for i, j in inversions(g.perm):
        factor = kt_mul(factor, _j_factor(c, i, j))
    return ga_from_torus(factor, g.n, g.N, left=g)


def j_map(c, a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Linear extension of J_c; c must lie in Q(zeta_N)."""
    if not c:
        raise ZeroDivisionError("J_c needs c != 0")
    out: dict = {}
    for g, x in a.terms.items():
        for h, y in j_map_element(c, g).terms.items():
            add_term(out, h, x * y)
    return GroupAlgebraElement(out, a.n, a.N)


def minus_i(N: int = 4):
    """The scalar -i in Q(zeta_N); requires 4 | N."""
    if N % 4:
        raise ValueError("Q(zeta_%d) does not contain i" % N)
    return -CycloContext(N).root(N // 4)


# -- kT, F and its Hopf data ------------------------------------------------------


def tensor_mul(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    for (x1, x2), p in a.items():
        for (y1, y2), q in b.items():
            add_term(out, (x1 ^ y1, x2 ^ y2), p * q)
    return out


def f_factor(i: int, j: int) -> dict:
    """f_ij = (1x1 + g_i x 1 + 1 x g_j - g_i x g_j)/2, 1-based i, j."""
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    return {(0, 0): HALF, (bi, 0): HALF, (0, bj): HALF, (bi, bj): -HALF}


@lru_cache(maxsize=None)
def _cocycle(n: int) -> tuple:
    F: dict = {(0, 0): Fraction(1)}
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            F = tensor_mul(F, f_factor(i, j))
    if tensor_mul(F, F) != {(0, 0): 1}:
        raise AssertionError("F is not self-inverse")
    return tuple(sorted(F.items()))


def cocycle_F(n: int) -> dict:
    """The cocycle prod_{j<i} f_ij on kT, T = (C_2)^n (self-inverse, asserted)."""
    return dict(_cocycle(n))


def trivial_cocycle() -> dict:
    return {(0, 0): Fraction(1)}


def counit(h: Mapping[int, object]):
    return sum(h.values(), Fraction(0))


def check_cocycle(F: Mapping) -> bool:
    """Cocycle identity (F x 1)(Delta x id)(F) = (1 x F)(id x Delta)(F) plus counitality."""
    lhs: dict = {}
    rhs: dict = {}
    for (a1, a2), p in F.items():
        for (b1, b2), q in F.items():
            # (F x 1) * (Delta x id)(F): (a1,a2,0)*(b1,b1,b2)
            add_term(lhs, (a1 ^ b1, a2 ^ b1, b2), p * q)
            # (1 x F) * (id x Delta)(F): (0,a1,a2)*(b1,b2,b2)
            add_term(rhs, (b1, a1 ^ b2, a2 ^ b2), p * q)
    if add_into(dict(lhs), rhs, -1):
        return False
    left: dict = {}
    right: dict = {}
    for (a1, a2), p in F.items():
        add_term(left, a2, p)
        add_term(right, a1, p)
    return left == {0: 1} and right == {0: 1}


def kt_inverse(h: Mapping[int, object], n: int) -> dict:
    """Inverse in the commutative algebra kT via its character basis."""
    size = 1 << n
    vals = []
    for chi in range(size):
        v = sum((c * (-1 if bin(chi & mask).count("1") % 2 else 1) for mask, c in h.items()), Fraction(0))
        if not v:
            raise ZeroDivisionError("element of kT is not invertible")
        vals.append(1 / v)
    out: dict = {}
    for mask in range(size):
        v = sum((vals[chi] * (-1 if bin(chi & mask).count("1") % 2 else 1) for chi in range(size)), Fraction(0))
        if v:
            out[mask] = v / size
    return out


def drinfeld_u(F: Mapping) -> dict:
    """U = F_1 S(F_2); S is the identity on T."""
    out: dict = {}
    for (a, b), p in F.items():
        add_term(out, a ^ b, p)
    return out


def twisted_coproduct(F: Mapping, h: Mapping[int, object]) -> dict:
    """Delta_F(h) = F (Delta h) F^-1, with F^-1 = F."""
    delta = {(x, x): c for x, c in h.items()}
    return tensor_mul(tensor_mul(F, delta), F)


def twisted_antipode(F: Mapping, h: Mapping[int, object], n: int) -> dict:
    U = drinfeld_u(F)
    return kt_mul(kt_mul(U, dict(h)), kt_inverse(U, n))


# -- module algebras --------------------------------------------------------------

BasisAction = Callable[[int, Hashable], tuple[Hashable, object]]


class ModuleAlgebra:
    """A kT-module algebra given on a basis.

    ``mul_basis(b1, b2)`` returns the product as a dict; ``act_basis(mask, b)``
    returns ``(b', c)`` with gamma^mask > b = c * b'.  ``u(mask)`` (optional)
    is an algebra map kT -> A making the action adjoint.
    """

    def __init__(
        self,
        n: int,
        mul_basis: Callable[[Hashable, Hashable], Mapping],
        act_basis: BasisAction,
        one: Hashable,
        u: Callable[[int], Mapping] | None = None,
        basis: Iterable[Hashable] | None = None,
    ):
        self.n = n
        self.mul_basis = mul_basis
        self.act_basis = act_basis
        self.one = one
        self.u = u
        self.basis = list(basis) if basis is not None else None

    def mul(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        for x, p in a.items():
            for y, q in b.items():
                add_into(out, self.mul_basis(x, y), p * q)
        return out

    def act(self, mask: int, a: Mapping) -> dict:
        out: dict = {}
        for x, p in a.items():
            y, c = self.act_basis(mask, x)
            add_term(out, y, p * c)
        return out

    def twisted_mul(self, a: Mapping, b: Mapping, F: Mapping) -> dict:
        """a * b = m(F^-1 > (a x b)); F^-1 = F for the cocycles used here."""
        out: dict = {}
        for (al, be), f in F.items():
            add_into(out, self.mul(self.act(al, a), self.act(be, b)), f)
        return out

    def eta(self, a: Mapping, F: Mapping) -> dict:
        """eta(a) = (f' > a) u(f'') for an adjoint action."""
        if self.u is None:
            raise ValueError("eta needs an adjoint action")
        out: dict = {}
        for (al, be), f in F.items():
            add_into(out, self.mul(self.act(al, a), self.u(be)), f)
        return out

    def is_adjoint_on(self, elements: Iterable[Hashable]) -> bool:
        """gamma > a == u(gamma) a u(gamma) for every generator gamma and given basis element."""
        if self.u is None:
            return False
        for b in elements:
            for k in range(self.n):
                mask = 1 << k
                lhs = self.act(mask, {b: 1})
                rhs = self.mul(self.mul(self.u(mask), {b: 1}), self.u(mask))
                if add_into(lhs, rhs, -1):
                    return False
        return True

    def action_axioms_on(self, elements: Iterable[Hashable]) -> bool:
        """gamma_i^2 = id, gamma_i gamma_j = gamma_j gamma_i, and gamma^a gamma^b = gamma^(a^b)."""
        elements = list(elements)
        for b in elements:
            for k in range(self.n):
                g = 1 << k
                if self.act(g, self.act(g, {b: 1})) != {b: 1}:
                    return False
                for k2 in range(self.n):
                    h = 1 << k2
                    if self.act(g, self.act(h, {b: 1})) != self.act(h, self.act(g, {b: 1})):
                        return False
            for mask in range(1 << self.n):
                direct = self.act(mask, {b: 1})
                step = {b: 1}
                for k in range(self.n):
                    if mask >> k & 1:
                        step = self.act(1 << k, step)
                if direct != step:
                    return False
        return True

    def is_module_algebra_on(self, pairs: Iterable[tuple[Hashable, Hashable]]) -> bool:
        """gamma > (ab) = (gamma > a)(gamma > b) for every generator gamma."""
        for x, y in pairs:
            for k in range(self.n):
                g = 1 << k
                lhs = self.act(g, self.mul_basis(x, y))
                rhs = self.mul(self.act(g, {x: 1}), self.act(g, {y: 1}))
                if add_into(lhs, rhs, -1):
                    return False
        return True


# -- smash products and the Kulish-Mudrov map ------------------------------------


def smash_mul(A: ModuleAlgebra, a: Mapping, b: Mapping, F: Mapping | None = None) -> dict:
    """Product in A # kT (or A_F # kT^F when F is given).

    Elements are dicts (basis, mask) -> scalar; for grouplike h,
    (a1 # h)(a2 # k) = a1 (h > a2) # hk, and Delta_F h = h x h on kT.
    """
    out: dict = {}
    for (x1, h1), p in a.items():
        for (x2, h2), q in b.items():
            moved = A.act(h1, {x2: 1})
            prod = A.twisted_mul({x1: 1}, moved, F) if F is not None else A.mul({x1: 1}, moved)
            for y, c in prod.items():
                add_term(out, (y, h1 ^ h2), p * q * c)
    return out


def kulish_mudrov(A: ModuleAlgebra, a: Mapping, F: Mapping) -> dict:
    """a # h -> (f' > a) # f'' h with F^-1 = f' x f''."""
    out: dict = {}
    for (x, h), p in a.items():
        for (al, be), f in F.items():
            y, c = A.act_basis(al, x)
            add_term(out, (y, be ^ h), p * f * c)
    return out


# -- Giaquinto-Zhang twist of an action ------------------------------------------


def gz_twist_action(
    act: Callable[[Hashable, Mapping], Mapping],
    A: ModuleAlgebra,
    act_on_module: Callable[[int, Mapping], Mapping],
    F: Mapping,
) -> Callable[[Hashable, Mapping], dict]:
    """Return a >_F v = (f' > a) > (f'' > v) as a function of (basis a, vector v)."""

    def twisted(a: Hashable, v: Mapping) -> dict:
        out: dict = {}
        for (al, be), f in F.items():
            y, c = A.act_basis(al, a)
            add_into(out, act(y, act_on_module(be, v)), f * c)
        return out

    return twisted


# -- the group algebra of a monomial group as a kT-module algebra ------------------


def group_algebra_module(spec: GroupSpec) -> ModuleAlgebra:
    """CG with gamma_i > g = t_i g t_i and u(gamma^mask) = t^mask (N even)."""
    n, N = spec.n, spec.N
    tor = [torus_product(n, mask, N) for mask in range(1 << n)]

    def mul_basis(g, h):
        return {g * h: Fraction(1)}

    def act_basis(mask, g):
        tm = tor[mask]
        return tm * g * tm, 1

    def u(mask):
        return {tor[mask]: Fraction(1)}

    return ModuleAlgebra(n, mul_basis, act_basis, spec.identity(), u=u, basis=enumerate_group(spec))


def to_dict(a: GroupAlgebraElement) -> dict:
    return dict(a.terms)


def from_dict(d: Mapping, n: int, N: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(d, n, N)


def eta_group(spec: GroupSpec, a: GroupAlgebraElement, F: Mapping | None = None) -> GroupAlgebraElement:
    A = group_algebra_module(spec)
    F = cocycle_F(spec.n) if F is None else F
    return from_dict(A.eta(to_dict(a), F), spec.n, spec.N)


def twisted_group_mul(spec: GroupSpec, a: GroupAlgebraElement, b: GroupAlgebraElement, F: Mapping | None = None) -> GroupAlgebraElement:
    A = group_algebra_module(spec)
    F = cocycle_F(spec.n) if F is None else F
    return from_dict(A.twisted_mul(to_dict(a), to_dict(b), F), spec.n, spec.N)
