"""Degree-truncated standard modules and the comparison of their twists.

The standard module of tau is H (x)_{S(V*) x| W} tau with the y-variables
acting on tau by zero; its carrier is the polynomial factor in the x's
tensored with tau.  A basis vector is ``(a, k)``: x^a (x) e_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .cherednik import BRAIDED, CherednikAlgebra, CherednikParams
from .embedding import _mystic_generators, phi_by_star_words
from .groups import GroupSpec, MonomialMatrix, enumerate_group, torus_product
from .hopf import cocycle_F, j_map_element, minus_i
from .linalg import RowSpace, add_into, add_term, nullspace
from .monomials import monomials_of_degree, monomials_up_to, unit, zero

Rep = Callable[[MonomialMatrix], list]


# -- representations ---------------------------------------------------------------


def trivial_rep(g: MonomialMatrix) -> list:
    return [[Fraction(1)]]


def natural_rep(spec: GroupSpec) -> Rep:
    ctx = spec.ctx
    return lambda g: g.matrix(ctx)


def linear_rep(s_value, t_value) -> Rep:
    """The linear character of a B_n-type group with s_i -> s_value, t_i -> t_value."""

    def rep(g: MonomialMatrix) -> list:
        odd = sum(1 for e in g.exps if e) % 2
        val = (Fraction(t_value) ** odd) * (Fraction(s_value) ** (1 if g.perm_sign() < 0 else 0))
        return [[val]]

    return rep


def rep_dim(rep: Rep, spec: GroupSpec) -> int:
    return len(rep(spec.identity()))


def pullback_rep(rep: Rep, jmap: Callable[[MonomialMatrix], Mapping]) -> Rep:
    """g -> sum_h c_h rep(h) for jmap(g) = sum_h c_h h."""
    cache: dict = {}

    def pulled(g):
        hit = cache.get(g)
        if hit is None:
            acc = None
            for h, c in jmap(g).items():
                mat = rep(h)
                term = [[c * x for x in row] for row in mat]
                acc = term if acc is None else [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(acc, term)]
            cache[g] = hit = acc
        return hit

    return pulled


def is_representation(rep: Rep, spec: GroupSpec) -> bool:
    from .linalg import mat_equal, mat_mul

    group = enumerate_group(spec)
    gens = list(group)[: min(len(group), 12)]
    return all(mat_equal(mat_mul(rep(g), rep(h)), rep(g * h)) for g in gens for h in group)


# -- truncated modules -------------------------------------------------------------


@dataclass
class TruncatedModule:
    """x-polynomials of degree <= cap tensored with tau; components above cap are dropped.

    ``t_rep`` gives the action of the torus T used for twisting; by default the
    torus elements act through ``rep`` (they must then lie in the group).
    """

    H: CherednikAlgebra
    rep: Rep
    cap: int
    t_rep: Rep | None = None
    dim: int = field(init=False)

    def __post_init__(self):
        self.dim = rep_dim(self.rep, self.H.spec)
        self._rep_cache: dict = {}

    def basis(self, degree: int | None = None) -> list:
        monos = monomials_of_degree(self.H.n, degree) if degree is not None else monomials_up_to(self.H.n, self.cap)
        return [(a, k) for a in monos for k in range(self.dim)]

    def graded_dim(self, degree: int) -> int:
        return len(self.basis(degree))

    def _tau(self, g: MonomialMatrix) -> list:
        hit = self._rep_cache.get(g)
        if hit is None:
            self._rep_cache[g] = hit = self.rep(g)
        return hit

    def act_word(self, word, vec: Mapping) -> dict:
        H = self.H
        z = zero(H.n)
        out: dict = {}
        for (a, k), c in vec.items():
            for (a2, g2, b2), d in H.mul_words(word, (a, H.identity, z)).items():
                if any(b2) or sum(a2) > self.cap:
                    continue
                mat = self._tau(g2)
                for r in range(self.dim):
                    x = mat[r][k]
                    if x:
                        add_term(out, (a2, r), c * d * x)
        return out

    def act(self, elem: Mapping, vec: Mapping) -> dict:
        out: dict = {}
        for w, c in elem.items():
            add_into(out, self.act_word(w, vec), c)
        return out

    def gamma(self, mask: int, vec: Mapping) -> dict:
        """Action of gamma^mask in T: sign on x^a times the torus element on tau."""
        tm = torus_product(self.H.n, mask, self.H.N)
        mat = (self.t_rep or self._tau)(tm)
        out: dict = {}
        for (a, k), c in vec.items():
            s = -1 if sum(a[i] for i in range(self.H.n) if mask >> i & 1) % 2 else 1
            for r in range(self.dim):
                x = mat[r][k]
                if x:
                    add_term(out, (a, r), s * c * x)
        return out

    def twisted_act(self, elem: Mapping, vec: Mapping, F: Mapping) -> dict:
        """h >_F v = sum F[al, be] (gamma^al > h) > (gamma^be > v)."""
        out: dict = {}
        for (al, be), f in F.items():
            moved = {}
            for w, c in elem.items():
                w2, s = self.H.t_act_basis(al, w)
                add_term(moved, w2, c * s)
            add_into(out, self.act(moved, self.gamma(be, vec)), f)
        return out


def standard_module(H: CherednikAlgebra, rep: Rep, cap: int, t_rep: Rep | None = None) -> TruncatedModule:
    return TruncatedModule(H, rep, cap, t_rep)


# -- twist comparison ------------------------------------------------------------------


@dataclass
class TwistReport:
    ok: bool
    checked_degree: int
    intertwiner_rank: list
    failures: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked_degree": self.checked_degree, "intertwiner_rank": self.intertwiner_rank,
                "failures": self.failures}


def _find_degree_zero_intertwiner(P0: Callable, Q0: Callable, gens, dim: int):
    """Y with P0(g) Y = Y Q0(g) for all g; returned invertible or None."""
    unknowns = [(r, k) for r in range(dim) for k in range(dim)]
    eqs = []
    for g in gens:
        P, Q = P0(g), Q0(g)
        for r in range(dim):
            for k in range(dim):
                eq: dict = {}
                for j in range(dim):
                    if P[r][j]:
                        add_term(eq, (j, k), P[r][j])
                    if Q[j][k]:
                        add_term(eq, (r, j), -Q[j][k])
                if eq:
                    eqs.append(eq)
    sols = nullspace(eqs, unknowns)
    candidates = list(sols)
    if sols:
        total: dict = {}
        for s in sols:
            add_into(total, s)
        candidates.insert(0, total)
    for sol in candidates:
        Y = [[sol.get((r, k), 0) for k in range(dim)] for r in range(dim)]
        if RowSpace().extend({k: x for k, x in enumerate(row) if x} for row in Y).rank == dim:
            return Y
    return None


def compare_modules(
    P_act: Callable[[object, Mapping], dict],
    Q_act: Callable[[object, Mapping], dict],
    generators: list,
    n: int,
    dim: int,
    cap: int,
    x_letters: list,
    group_letters: list,
) -> TwistReport:
    """Build theta(x^a (x) v) = P(x)^a (1 (x) Y v) and test theta Q(h) = P(h) theta.

    Both actions live on the carrier {(a, k)}; ``x_letters[i]`` is the letter
    acting as x_{i+1} and ``group_letters`` the letters used to fix Y.
    """

    def as_matrix0(act, g):
        cols = [act(g, {(zero(n), k): 1}) for k in range(dim)]
        return [[cols[k].get((zero(n), r), 0) for k in range(dim)] for r in range(dim)]

    Y = _find_degree_zero_intertwiner(lambda g: as_matrix0(P_act, g), lambda g: as_matrix0(Q_act, g), group_letters, dim)
    if Y is None:
        return TwistReport(False, -1, [], ["no invertible degree-zero intertwiner"])
    theta: dict = {}
    for k in range(dim):
        theta[(zero(n), k)] = {(zero(n), r): Y[r][k] for r in range(dim) if Y[r][k]}
    for d in range(1, cap + 1):
        for a in monomials_of_degree(n, d):
            i = next(idx for idx in range(n) if a[idx])
            rest = tuple(v - (1 if idx == i else 0) for idx, v in enumerate(a))
            # Q(x_i) (x^rest (x) v) = s x^a (x) v, so theta(x^a (x) v) = s P(x_i) theta(x^rest (x) v)
            for k in range(dim):
                q = Q_act(x_letters[i], {(rest, k): 1})
                s = q.get((a, k))
                if s is None or len(q) != 1:
                    return TwistReport(False, -1, [], ["x-letters do not act freely on the target module"])
                theta[(a, k)] = {key: v / s for key, v in P_act(x_letters[i], theta[(rest, k)]).items()}
    ranks = []
    failures = []
    for d in range(cap + 1):
        rs = RowSpace().extend(theta[(a, k)] for a in monomials_of_degree(n, d) for k in range(dim))
        ranks.append(rs.rank)
        if rs.rank != len(monomials_of_degree(n, d)) * dim:
            failures.append(f"theta not bijective in degree {d}")

    def apply_theta(vec):
        out: dict = {}
        for key, c in vec.items():
            add_into(out, theta[key], c)
        return out

    for d in range(cap):
        for a in monomials_of_degree(n, d):
            for k in range(dim):
                v = {(a, k): 1}
                for h in generators:
                    lhs = apply_theta(Q_act(h, v))
                    rhs = P_act(h, theta[(a, k)])
                    if add_into(lhs, rhs, -1):
                        failures.append(f"{h} on x^{a} e{k}")
    return TwistReport(not failures, cap - 1, ranks, failures)


def check_standard_module_twist(
    m: int,
    p: int,
    n: int,
    rep: Rep,
    cap: int = 2,
    c1=Fraction(1),
    c_zeta: Mapping[int, object] | None = None,
    t_rep: Rep | None = None,
    mutate: str | None = None,
) -> TwistReport:
    """Compare the phi-pullback of M_c(tau)_F with the braided standard module of tau o J_{-i}.

    Works over Q(zeta_lcm(m, 4)) so that J_{-i} is defined.  ``rep`` is a
    representation of G(m,p,n) (given on the enumerated group at that
    conductor); for m/p odd pass ``t_rep``, a representation of an
    overgroup containing T that restricts to ``rep``.
    """
    N = m if m % 4 == 0 else 2 * m if m % 2 == 0 else 4 * m
    W = GroupSpec(m, p, n, "reflection", N)
    muW = GroupSpec(m, p, n, "mystic", N)
    under = CherednikParams.make(muW, 0, c1, c_zeta or {}, BRAIDED)
    H = CherednikAlgebra(W, CherednikParams.make(W, 0, -c1, {k: -v for k, v in (c_zeta or {}).items()}))
    Hbar = CherednikAlgebra(muW, under, mutate=mutate)
    F = cocycle_F(n)
    M = TruncatedModule(H, rep, cap, t_rep)
    mi = minus_i(N)
    rep_under = pullback_rep(rep, lambda g: dict(j_map_element(mi, g).terms))
    Mbar = TruncatedModule(Hbar, rep_under, cap)
    phi = phi_by_star_words(muW)
    z = zero(n)
    gens = _mystic_generators(muW)

    def letter_elem(letter, alg: CherednikAlgebra, phi_map: bool):
        kind, val = letter
        if kind == "x":
            return {(unit(n, val - 1), alg.identity, z): 1}
        if kind == "y":
            return {(z, alg.identity, unit(n, val - 1)): 1}
        if phi_map:
            return {(z, h, z): c for h, c in phi[val].terms.items()}
        return {(z, val, z): 1}

    def P_act(letter, vec):
        return M.twisted_act(letter_elem(letter, H, True), vec, F)

    def Q_act(letter, vec):
        return Mbar.act(letter_elem(letter, Hbar, False), vec)

    letters = [("x", i) for i in range(1, n + 1)] + [("y", i) for i in range(1, n + 1)] + [("g", g) for g in gens]
    return compare_modules(P_act, Q_act, letters, n, M.dim, cap, [("x", i) for i in range(1, n + 1)],
                           [("g", g) for g in gens])


def check_untwisted_identity(m: int, p: int, n: int, rep: Rep, cap: int = 2, c1=Fraction(1)) -> TwistReport:
    """With the trivial cocycle and no change of algebra the comparison must succeed."""
    W = GroupSpec(m, p, n)
    H = CherednikAlgebra(W, CherednikParams.make(W, 0, c1))
    M = TruncatedModule(H, rep, cap)
    F = {(0, 0): Fraction(1)}
    z = zero(n)

    def elem(letter):
        kind, val = letter
        if kind == "x":
            return {(unit(n, val - 1), H.identity, z): 1}
        if kind == "y":
            return {(z, H.identity, unit(n, val - 1)): 1}
        return {(z, val, z): 1}

    from .groups import generators as group_generators

    gens = group_generators(W)
    letters = [("x", i) for i in range(1, n + 1)] + [("y", i) for i in range(1, n + 1)] + [("g", g) for g in gens]
    return compare_modules(lambda h, v: M.twisted_act(elem(h), v, F), lambda h, v: M.act(elem(h), v), letters, n,
                           M.dim, cap, [("x", i) for i in range(1, n + 1)], [("g", g) for g in gens])
