"""The factorisation H = S(V) . (CG S(V*)) and its braiding Psi, before and after twisting."""

from __future__ import annotations

from typing import Mapping

from .cherednik import CherednikAlgebra
from .groups import enumerate_group
from .hopf import cocycle_F
from .linalg import add_into, add_term, solve
from .monomials import monomials_up_to, zero

# An element of A (x) B is a dict ((a), (g, b)) -> scalar; B (x) A uses ((g, b), (a)).


class TruncationExceeded(ValueError):
    pass


def psi(H: CherednikAlgebra, b: Mapping, a: Mapping) -> dict:
    """Psi_C(b (x) a): the normal form of b*a split as x^a' (x) g' y^b'.

    ``b`` is a dict (g, y_exps) -> scalar and ``a`` a dict x_exps -> scalar.
    """
    n = H.n
    z = zero(n)
    out: dict = {}
    for (g, yb), p in b.items():
        for xa, q in a.items():
            for (a2, g2, b2), c in H.mul_words((z, g, yb), (xa, H.identity, z)).items():
                add_term(out, (a2, (g2, b2)), p * q * c)
    return out


def psi_tensor(H: CherednikAlgebra, t: Mapping) -> dict:
    """Psi_C extended linearly to B (x) A given as ((g, b), a) -> scalar."""
    out: dict = {}
    for (gb, xa), c in t.items():
        add_into(out, psi(H, {gb: 1}, {xa: 1}), c)
    return out


def _act_b(H: CherednikAlgebra, mask: int, gb):
    (a, g, b), s = H.t_act_basis(mask, (zero(H.n), gb[0], gb[1]))
    return (g, b), s


def _act_a(H: CherednikAlgebra, mask: int, xa):
    (a, g, b), s = H.t_act_basis(mask, (xa, H.identity, zero(H.n)))
    return a, s


def act_tensor_ba(H: CherednikAlgebra, F: Mapping, t: Mapping) -> dict:
    """F > (b (x) a) with F = sum F[al, be] gamma^al (x) gamma^be."""
    out: dict = {}
    for (gb, xa), c in t.items():
        for (al, be), f in F.items():
            gb2, s1 = _act_b(H, al, gb)
            xa2, s2 = _act_a(H, be, xa)
            add_term(out, (gb2, xa2), c * f * s1 * s2)
    return out


def act_tensor_ab(H: CherednikAlgebra, F: Mapping, t: Mapping) -> dict:
    out: dict = {}
    for (xa, gb), c in t.items():
        for (al, be), f in F.items():
            xa2, s1 = _act_a(H, al, xa)
            gb2, s2 = _act_b(H, be, gb)
            add_term(out, (xa2, gb2), c * f * s1 * s2)
    return out


def twisted_word_product(H: CherednikAlgebra, F: Mapping, w1, w2) -> dict:
    """w1 * w2 = sum F[al, be] (gamma^al > w1)(gamma^be > w2) on normal words."""
    out: dict = {}
    for (al, be), f in F.items():
        u1, s1 = H.t_act_basis(al, w1)
        u2, s2 = H.t_act_basis(be, w2)
        add_into(out, H.mul_words(u1, u2), f * s1 * s2)
    return out


def psi_twisted(H: CherednikAlgebra, F: Mapping, gb, xa) -> dict:
    """Psi_{C_F}(b (x) a), solving m_F(sum z_{a',b'} a' (x) b') = b * a directly."""
    n = H.n
    z = zero(n)
    target = twisted_word_product(H, F, (z, gb[0], gb[1]), (xa, H.identity, z))
    # m_F(x^a (x) g y^b) only permutes the group part within a block (a, b)
    blocks: dict = {}
    for (a, g, b), c in target.items():
        blocks.setdefault((a, b), {})[g] = c
    group = enumerate_group(H.spec)
    out: dict = {}
    for (a, b), rhs in blocks.items():
        eqs: dict = {}
        for g in group:
            for (a2, g2, b2), c in twisted_word_product(H, F, (a, H.identity, z), (z, g, b)).items():
                if (a2, b2) != (a, b):
                    raise AssertionError("twisted product left its block")
                add_term(eqs.setdefault(g2, {}), g, c)
        rows = [(eqs.get(h, {}), rhs.get(h, 0)) for h in group]
        sol = solve(rows, group)
        if sol is None:
            raise AssertionError("twisted multiplication A (x) B -> C is not invertible")
        for g, c in sol.items():
            add_term(out, (a, (g, b)), c)
    return out


def twist_factorisation_check(H: CherednikAlgebra, max_degree: int = 2, F: Mapping | None = None,
                              F_conj: Mapping | None = None) -> bool:
    """Psi_{C_F} == (F >) Psi_C (F^{-1} >) on basis pairs of total degree <= max_degree.

    ``F_conj`` (default F) is the cocycle used on the right-hand side; the
    cocycles in use are self-inverse so it also plays the role of F^{-1}.
    """
    F = cocycle_F(H.n) if F is None else F
    F_conj = F if F_conj is None else F_conj
    n = H.n
    group = enumerate_group(H.spec)
    monos = monomials_up_to(n, max_degree)
    for xa in monos:
        for yb in monos:
            if sum(xa) + sum(yb) > max_degree:
                continue
            for g in group:
                gb = (g, yb)
                lhs = psi_twisted(H, F, gb, xa)
                rhs = act_tensor_ab(H, F_conj, psi_tensor(H, act_tensor_ba(H, F_conj, {(gb, xa): 1})))
                if add_into(lhs, rhs, -1):
                    return False
    return True
