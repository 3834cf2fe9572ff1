"""Monomial matrices and the groups G(m,p,n), mu(G(m,p,n)) and their relatives.

An element is stored as ``(perm, exps)`` over an ambient conductor ``N``: it
sends the basis vector x_k to zeta_N^{exps[k]} x_{perm[k]} (indices 0-based
internally).  As a matrix this is w.t with t = diag(zeta^exps) and w the
permutation matrix of ``perm``; column k holds the image of x_k.

A :class:`GroupSpec` picks a subgroup by a membership predicate.  Its
parameter ``m`` must divide the conductor, so for instance B_n = G(2,1,n) can
live inside the field Q(i) when maps such as J_{-i} need that field.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import CycloContext

DEFAULT_GROUP_CAP = 10_000

FLAVORS = ("reflection", "mystic", "torus", "full-monomial", "symmetric")


class GroupTooLarge(ValueError):
    pass


class MonomialMatrix:
    """An n x n monomial matrix whose entries are powers of zeta_N.  Immutable."""

    __slots__ = ("perm", "exps", "N", "_hash")

    def __init__(self, perm: Sequence[int], exps: Sequence[int], N: int):
        self.perm = tuple(perm)
        self.exps = tuple(e % N for e in exps)
        self.N = N
        self._hash = hash((self.perm, self.exps, N))
        if len(self.perm) != len(self.exps):
            raise ValueError("perm and exps differ in length")

    @classmethod
    def identity(cls, n: int, N: int) -> "MonomialMatrix":
        return cls(range(n), (0,) * n, N)

    @property
    def n(self) -> int:
        return len(self.perm)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialMatrix)
            and self._hash == other._hash
            and self.perm == other.perm
            and self.exps == other.exps
            and self.N == other.N
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (self.perm, self.exps)

    def __lt__(self, other: "MonomialMatrix") -> bool:
        return self.sort_key() < other.sort_key()

    def _check(self, other: "MonomialMatrix") -> None:
        if self.N != other.N or self.n != other.n:
            raise ValueError("monomial matrices of different size or conductor")

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        """Composition self o other (apply ``other`` first)."""
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        self._check(other)
        sp, se = self.perm, self.exps
        perm = tuple(sp[j] for j in other.perm)
        exps = tuple(e + se[j] for e, j in zip(other.exps, other.perm))
        return MonomialMatrix(perm, exps, self.N)

    compose = __mul__

    def inverse(self) -> "MonomialMatrix":
        n = self.n
        perm = [0] * n
        exps = [0] * n
        for k, (j, e) in enumerate(zip(self.perm, self.exps)):
            perm[j] = k
            exps[j] = -e
        return MonomialMatrix(perm, exps, self.N)

    def __pow__(self, k: int) -> "MonomialMatrix":
        base = self if k >= 0 else self.inverse()
        out = MonomialMatrix.identity(self.n, self.N)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.exps)

    def is_diagonal(self) -> bool:
        return self.perm == tuple(range(self.n))

    # -- actions --------------------------------------------------------------
    def act_on_x(self, k: int) -> tuple[int, int]:
        """g(x_k) = zeta^e x_j; returns (j, e), 0-based."""
        return self.perm[k], self.exps[k]

    def act_on_y(self, k: int) -> tuple[int, int]:
        """Dual action g(y_k) = zeta^e y_j, returns (j, e), 0-based."""
        return self.perm[k], (-self.exps[k]) % self.N

    # -- invariants -----------------------------------------------------------
    def perm_sign(self) -> int:
        return perm_sign(self.perm)

    def det_exponent_2N(self) -> int:
        """det(g) = zeta_{2N}^k; returns k mod 2N."""
        k = 2 * sum(self.exps)
        if self.perm_sign() < 0:
            k += self.N
        return k % (2 * self.N)

    def determinant(self, ctx: CycloContext | None = None):
        ctx = ctx or CycloContext(self.N)
        return ctx.zeta(sum(self.exps)) * self.perm_sign()

    def entry_product_exp(self) -> int:
        return sum(self.exps) % self.N

    def matrix(self, ctx: CycloContext | None = None) -> list[list]:
        ctx = ctx or CycloContext(self.N)
        n = self.n
        mat = [[0] * n for _ in range(n)]
        for k, (j, e) in enumerate(zip(self.perm, self.exps)):
            mat[j][k] = ctx.zeta(e)
        return mat

    def projection(self) -> tuple[int, ...]:
        """Image in S_n (forget the exponents)."""
        return self.perm

    # -- text -----------------------------------------------------------------
    def token(self) -> str:
        return element_token(self)

    def __repr__(self) -> str:
        return self.token()

    __str__ = __repr__


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def inversions(perm: Sequence[int]) -> list[tuple[int, int]]:
    n = len(perm)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]]


# -- generators -----------------------------------------------------------------


def _half(N: int) -> int:
    if N % 2:
        raise ValueError("-1 is not a power of zeta_%d" % N)
    return N // 2


def gen_s(n: int, i: int, j: int, N: int, e: int = 0) -> MonomialMatrix:
    """s_ij^(eps), eps = zeta_N^e, 1-based i != j: x_i -> eps^-1 x_j, x_j -> eps x_i."""
    if i == j:
        raise ValueError("s_ij needs i != j")
    i, j = i - 1, j - 1
    perm = list(range(n))
    perm[i], perm[j] = j, i
    exps = [0] * n
    exps[i] = -e
    exps[j] = e
    return MonomialMatrix(perm, exps, N)


def gen_t(n: int, i: int, N: int, e: int | None = None) -> MonomialMatrix:
    """t_i^(eps) with eps = zeta_N^e; default e gives eps = -1."""
    if e is None:
        e = _half(N)
    exps = [0] * n
    exps[i - 1] = e
    return MonomialMatrix(range(n), exps, N)


def gen_sigma(n: int, i: int, j: int, N: int, e: int = 0) -> MonomialMatrix:
    """sigma_ij^(eps): x_i -> eps^-1 x_j, x_j -> -eps x_i."""
    if i == j:
        raise ValueError("sigma_ij needs i != j")
    g = gen_s(n, i, j, N, e)
    exps = list(g.exps)
    exps[j - 1] += _half(N)
    return MonomialMatrix(g.perm, exps, N)


def s(n: int, i: int, N: int) -> MonomialMatrix:
    """The simple transposition s_i = s_{i,i+1}^(1)."""
    return gen_s(n, i, i + 1, N, 0)


def sbar(n: int, i: int, N: int) -> MonomialMatrix:
    """s-bar_i = s_{i,i+1}^(-1)."""
    return gen_s(n, i, i + 1, N, _half(N))


def sigma(n: int, i: int, N: int) -> MonomialMatrix:
    """sigma_i = sigma_{i,i+1}^(1)."""
    return gen_sigma(n, i, i + 1, N, 0)


def t(n: int, i: int, N: int) -> MonomialMatrix:
    """t_i = t_i^(-1)."""
    return gen_t(n, i, N)


def torus_product(n: int, mask: int, N: int) -> MonomialMatrix:
    """prod_{k in mask} t_k, with bit k-1 standing for t_k."""
    h = _half(N)
    return MonomialMatrix(range(n), [h if mask >> k & 1 else 0 for k in range(n)], N)


# -- group specs ----------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    """A finite subgroup of monomial matrices.

    ``m`` is the order of the allowed roots of unity; ``N`` is the conductor of
    the ambient field (a multiple of m, default m).
    """

    m: int
    p: int
    n: int
    flavor: str = "reflection"
    N: int = 0

    def __post_init__(self):
        if self.N == 0:
            object.__setattr__(self, "N", self.m)
        if self.m < 1 or self.p < 1 or self.n < 1:
            raise ValueError("m, p, n must be positive")
        if self.m % self.p:
            raise ValueError("p must divide m")
        if self.N % self.m:
            raise ValueError("m must divide the conductor N")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")

    @property
    def ctx(self) -> CycloContext:
        return CycloContext(self.N)

    @property
    def q(self) -> int:
        """m/p."""
        return self.m // self.p

    def with_conductor(self, N: int) -> "GroupSpec":
        return GroupSpec(self.m, self.p, self.n, self.flavor, N)

    def with_flavor(self, flavor: str) -> "GroupSpec":
        return GroupSpec(self.m, self.p, self.n, flavor, self.N)

    def order(self) -> int:
        m, p, n = self.m, self.p, self.n
        if self.flavor in ("reflection", "mystic"):
            return m**n * math.factorial(n) // p
        if self.flavor == "torus":
            return m**n // p
        if self.flavor == "full-monomial":
            return m**n * math.factorial(n)
        return math.factorial(n)

    def contains(self, g: MonomialMatrix) -> bool:
        return is_member(g, self)

    def identity(self) -> MonomialMatrix:
        return MonomialMatrix.identity(self.n, self.N)

    def label(self) -> str:
        base = f"G({self.m},{self.p},{self.n})"
        if self.flavor == "mystic":
            return f"mu({base})"
        if self.flavor == "reflection":
            return base
        return f"{self.flavor}({self.m},{self.p},{self.n})"

    def to_json(self) -> dict:
        return {"m": self.m, "p": self.p, "n": self.n, "flavor": self.flavor, "conductor": self.N}


def is_member(g: MonomialMatrix, spec: GroupSpec) -> bool:
    if g.n != spec.n or g.N != spec.N:
        return False
    step = spec.N // spec.m
    if any(e % step for e in g.exps):
        return False
    q = spec.q
    fl = spec.flavor
    if fl == "full-monomial":
        return True
    if fl == "symmetric":
        return not any(g.exps)
    if fl == "reflection":
        return (q * sum(g.exps)) % spec.N == 0
    if fl == "torus":
        return g.is_diagonal() and (q * sum(g.exps)) % spec.N == 0
    # mystic: det^(m/p) = 1, det = zeta_{2N}^k
    return (q * g.det_exponent_2N()) % (2 * spec.N) == 0


_ENUM_CACHE: dict[GroupSpec, tuple[MonomialMatrix, ...]] = {}


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_GROUP_CAP) -> tuple[MonomialMatrix, ...]:
    """All elements of ``spec``, identity first, the rest in a fixed order."""
    cached = _ENUM_CACHE.get(spec)
    if cached is not None:
        return cached
    if spec.order() > cap:
        raise GroupTooLarge(f"{spec.label()} has order {spec.order()} > cap {cap}")
    n, N = spec.n, spec.N
    step = N // spec.m
    choices = range(0, N, step)
    perms = [tuple(range(n))] if spec.flavor == "torus" else list(itertools.permutations(range(n)))
    out = []
    for perm in perms:
        for exps in itertools.product(choices, repeat=n):
            g = MonomialMatrix(perm, exps, N)
            if is_member(g, spec):
                out.append(g)
    ident = spec.identity()
    out.sort(key=lambda g: (not g.is_identity(), g.sort_key()))
    assert out[0] == ident
    result = tuple(out)
    _ENUM_CACHE[spec] = result
    return result


def conjugacy_classes(spec: GroupSpec, cap: int = DEFAULT_GROUP_CAP) -> list[list[MonomialMatrix]]:
    elems = enumerate_group(spec, cap)
    inverses = [g.inverse() for g in elems]
    seen: set = set()
    classes = []
    for x in elems:
        if x in seen:
            continue
        cls = sorted({g * x * gi for g, gi in zip(elems, inverses)}, key=lambda g: (not g.is_identity(), g.sort_key()))
        seen.update(cls)
        classes.append(cls)
    return classes


def generators(spec: GroupSpec) -> list[MonomialMatrix]:
    """A generating set (checked by closure in tests).

    Uses simple transpositions (or sigma_i for the mystic flavor when m/p is
    odd) plus diagonal and s_{12}^(eps) elements of the group.
    """
    n, N = spec.n, spec.N
    gens = []
    if spec.flavor != "torus":
        for i in range(1, n):
            g = s(n, i, N)
            if not is_member(g, spec):
                g = sigma(n, i, N)
            gens.append(g)
    step = N // spec.m
    if spec.flavor != "symmetric":
        for i in range(1, n + 1):
            for e in range(step, N, step):
                g = gen_t(n, i, N, e)
                if is_member(g, spec):
                    gens.append(g)
                    break
        if n >= 2:
            for e in range(step, N, step):
                for g in (gen_s(n, 1, 2, N, e), gen_sigma(n, 1, 2, N, e) if N % 2 == 0 else None):
                    if g is not None and is_member(g, spec) and g not in gens:
                        gens.append(g)
        for i in range(1, n):
            for e in range(step, N, step):
                g = MonomialMatrix(range(n), [e if k == i - 1 else (-e if k == i else 0) for k in range(n)], N)
                if is_member(g, spec) and g not in gens:
                    gens.append(g)
                    break
    return gens


def closure(gens: Iterable[MonomialMatrix], n: int, N: int) -> set[MonomialMatrix]:
    gens = list(gens)
    ident = MonomialMatrix.identity(n, N)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- text syntax ----------------------------------------------------------------


def element_token(g: MonomialMatrix) -> str:
    """Canonical text form: "1", "s(i,j;e)", "t(i;e)", "sg(i,j;e)" or "m(perm;exps)"."""
    n, N = g.n, g.N
    if g.is_identity():
        return "1"
    if g.is_diagonal():
        nz = [k for k, e in enumerate(g.exps) if e]
        if len(nz) == 1:
            return f"t({nz[0] + 1};{g.exps[nz[0]]})"
    moved = [k for k in range(n) if g.perm[k] != k]
    if len(moved) == 2:
        i, j = moved
        if all(g.exps[k] == 0 for k in range(n) if k not in moved):
            a = g.exps[j]
            if (g.exps[i] + a) % N == 0:
                return f"s({i + 1},{j + 1};{a})"
            if N % 2 == 0 and (g.exps[i] + a - N // 2) % N == 0:
                return f"sg({i + 1},{j + 1};{(a - N // 2) % N})"
    perm = ",".join(str(k + 1) for k in g.perm)
    exps = ",".join(str(e) for e in g.exps)
    return f"m({perm};{exps})"


_TOKEN_RE = re.compile(r"^\s*(s|t|sg|m)\s*\(([^;]*);([^)]*)\)\s*$")


def parse_element_token(text: str, n: int, N: int) -> MonomialMatrix:
    text = text.strip()
    if text == "1":
        return MonomialMatrix.identity(n, N)
    mt = _TOKEN_RE.match(text)
    if not mt:
        raise ValueError(f"cannot parse group element {text!r}")
    kind, idx, ex = mt.groups()
    idx_vals = [int(v) for v in idx.split(",") if v.strip()]
    ex_vals = [int(v) for v in ex.split(",") if v.strip()]
    if kind == "m":
        if len(idx_vals) != n or len(ex_vals) != n or sorted(idx_vals) != list(range(1, n + 1)):
            raise ValueError(f"bad monomial matrix {text!r}")
        return MonomialMatrix([v - 1 for v in idx_vals], ex_vals, N)
    (e,) = ex_vals
    for v in idx_vals:
        if not 1 <= v <= n:
            raise ValueError(f"index out of range in {text!r}")
    if kind == "t":
        (i,) = idx_vals
        return gen_t(n, i, N, e)
    i, j = idx_vals
    if kind == "s":
        return gen_s(n, i, j, N, e)
    return gen_sigma(n, i, j, N, e)
