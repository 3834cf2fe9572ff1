"""The map eta*phi from the negative braided Cherednik algebra of mu(G(m,p,n))
into the rational Cherednik algebra of G(m,p',n), and phi on group algebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cherednik import BRAIDED, RATIONAL, CherednikAlgebra, CherednikElement, CherednikParams, zeta_keys
from .groups import GroupSpec, MonomialMatrix, enumerate_group, gen_t, is_member, sbar, sigma, torus_product
from .hopf import (
    GroupAlgebraElement,
    cocycle_F,
    eta_group,
    j_map_element,
    twisted_group_mul,
)
from .linalg import RowSpace, add_term, mat_inverse
from .monomials import monomials_of_degree, unit, zero


def target_p(m: int, p: int) -> int:
    if (m // p) % 2 == 0:
        return p
    if p % 2:
        raise ValueError("m/p odd needs p even to halve it")
    return p // 2


def source_spec(m: int, p: int, n: int, N: int | None = None) -> GroupSpec:
    return GroupSpec(m, p, n, "mystic", N or m)


def target_spec(source: GroupSpec) -> GroupSpec:
    return GroupSpec(source.m, target_p(source.m, source.p), source.n, "reflection", source.N)


def target_params(source: GroupSpec, params: CherednikParams) -> CherednikParams:
    """c_1 = -c_1 and c_zeta = -c_zeta, with c_zeta = 0 on roots new to G(m,p',n)."""
    tgt = target_spec(source)
    given = params.c_zeta_dict()
    cz = {k: -given[k] if k in given else 0 for k in zeta_keys(tgt)}
    return CherednikParams.make(tgt, params.t, -params.c1, cz, RATIONAL)


def _ga_terms(a: GroupAlgebraElement) -> dict:
    return dict(a.terms)


@dataclass
class Embedding:
    """eta*phi on generators: x_i -> x_i t_{i-1}...t_1, y_i likewise, w -> J_1(w)."""

    source: CherednikAlgebra
    target: CherednikAlgebra

    @classmethod
    def build(cls, m: int, p: int, n: int, params: CherednikParams, N: int | None = None, mutate: str | None = None,
              target_override: CherednikParams | None = None) -> "Embedding":
        if m % 2 or n < 2:
            raise ValueError("the embedding needs m even and n >= 2")
        src_spec = source_spec(m, p, n, N)
        src = CherednikAlgebra(src_spec, params.with_flavor(BRAIDED), mutate=mutate)
        tgt_params = target_override or target_params(src_spec, params)
        tgt = CherednikAlgebra(target_spec(src_spec), tgt_params)
        return cls(src, tgt)

    @cached_property
    def _prefix_tori(self) -> list[MonomialMatrix]:
        n, N = self.source.n, self.source.N
        return [torus_product(n, (1 << i) - 1, N) for i in range(n)]

    def x_image(self, i: int) -> CherednikElement:
        """Image of x_i (1-based)."""
        return self.target.x(i) * self.target.g(self._prefix_tori[i - 1])

    def y_image(self, i: int) -> CherednikElement:
        return self.target.y(i) * self.target.g(self._prefix_tori[i - 1])

    def group_image(self, g: MonomialMatrix) -> CherednikElement:
        return self.target.group_element(_ga_terms(j_map_element(Fraction(1), g)))

    def _power_image(self, a: tuple, image) -> CherednikElement:
        out = self.target.one()
        for k, e in enumerate(a):
            for _ in range(e):
                out = out * image(k + 1)
        return out

    def word_image(self, word) -> CherednikElement:
        a, g, b = word
        return self._power_image(a, self.x_image) * self.group_image(g) * self._power_image(b, self.y_image)

    def __call__(self, elem: CherednikElement) -> CherednikElement:
        out = self.target.elem()
        for w, c in elem.terms.items():
            out = out + self.word_image(w) * c
        return out

    def letter_image(self, letter) -> CherednikElement:
        kind, val = letter
        if kind == "x":
            return self.x_image(val)
        if kind == "y":
            return self.y_image(val)
        return self.group_image(val)

    # -- relation preservation ----------------------------------------------------
    def relation_images(self):
        """Yield (name, image) for every defining relation of the source, mapped letterwise."""
        src = self.source
        n, sign = src.n, src.sign
        X, Y, G = self.x_image, self.y_image, self.group_image
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i < j:
                    yield f"x{i}x{j}", X(i) * X(j) - sign * (X(j) * X(i))
                    yield f"y{i}y{j}", Y(i) * Y(j) - sign * (Y(j) * Y(i))
                corr = self.target.elem()
                for h, c in src.correction(i - 1, j - 1).items():
                    corr = corr + G(h) * c
                s = sign if i != j else 1
                yield f"y{i}x{j}", Y(i) * X(j) - s * (X(j) * Y(i)) - corr
        group = enumerate_group(src.spec)
        gens = _mystic_generators(src.spec)
        for g in gens:
            for i in range(1, n + 1):
                k, e = g.act_on_x(i - 1)
                z = src.ctx.zeta(e)
                yield f"{g.token()}x{i}", G(g) * X(i) - X(k + 1) * G(g) * z
                gi = g.inverse()
                k, e = gi.act_on_y(i - 1)
                z = src.ctx.zeta(e)
                yield f"y{i}{g.token()}", Y(i) * G(g) - G(g) * Y(k + 1) * z
            for h in group:
                yield f"{g.token()}*{h.token()}", G(g) * G(h) - G(g * h)

    def check_relations(self) -> list[str]:
        """Names of relations whose image is nonzero (empty list means all preserved)."""
        return [name for name, img in self.relation_images() if not img.is_zero()]

    # -- bijectivity -------------------------------------------------------------------
    def bidegree_ranks(self, max_degree: int = 2):
        """[(da, db, #source words, #target words, rank of image)] for da + db <= max_degree."""
        n = self.source.n
        src_group = enumerate_group(self.source.spec)
        tgt_order = len(enumerate_group(self.target.spec))
        out = []
        for total in range(max_degree + 1):
            for da in range(total + 1):
                db = total - da
                xs, ys = monomials_of_degree(n, da), monomials_of_degree(n, db)
                rs = RowSpace()
                count = 0
                for a in xs:
                    xa = self._power_image(a, self.x_image)
                    for b in ys:
                        yb = self._power_image(b, self.y_image)
                        for g in src_group:
                            rs.add((xa * self.group_image(g) * yb).terms)
                            count += 1
                out.append((da, db, count, len(xs) * len(ys) * tgt_order, rs.rank))
        return out

    def is_bijective_up_to(self, max_degree: int = 2) -> bool:
        return all(c == t == r for _, _, c, t, r in self.bidegree_ranks(max_degree))


def _mystic_generators(spec: GroupSpec) -> list[MonomialMatrix]:
    """sigma_i together with the diagonal generators of the group."""
    n, N = spec.n, spec.N
    gens = [sigma(n, i, N) for i in range(1, n)]
    step = N // spec.m
    for i in range(1, n + 1):
        for e in range(step, N, step):
            for g in (gen_t(n, i, N, e), MonomialMatrix(range(n), [e if k == i - 1 else (-e if k == i % n else 0) for k in range(n)], N)):
                if is_member(g, spec) and g not in gens and not g.is_identity():
                    gens.append(g)
    return gens


# -- phi on group algebras -----------------------------------------------------------------


def phi_generator_image(g: MonomialMatrix) -> MonomialMatrix:
    """phi(sigma_i) = sbar_i and phi(t) = t."""
    if g.is_diagonal():
        return g
    n, N = g.n, g.N
    for i in range(1, n):
        if g == sigma(n, i, N):
            return sbar(n, i, N)
    raise ValueError(f"{g} is not a generator with a known phi image")


def phi_by_star_words(spec: GroupSpec, target: GroupSpec | None = None) -> dict[MonomialMatrix, GroupAlgebraElement]:
    """phi(w) for every w in mu(G), as star-products of generator images in (CG')_F.

    ``target`` defaults to the group of the embedding; any group containing
    the images sbar_i and the diagonal generators works.
    """
    tgt = target or target_spec(spec)
    n, N = spec.n, spec.N
    F = cocycle_F(n)
    gens = _mystic_generators(spec)
    images = {g: GroupAlgebraElement.basis(phi_generator_image(g)) for g in gens}
    ident = spec.identity()
    out = {ident: GroupAlgebraElement.one(n, N)}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                y = w * g
                if y not in out:
                    out[y] = twisted_group_mul(tgt, out[w], images[g], F)
                    nxt.append(y)
        frontier = nxt
    if len(out) != spec.order():
        raise AssertionError("generators do not span the group")
    return out


def eta_inverse_matrix(spec: GroupSpec):
    """(basis, inverse matrix) of eta: (CG)_F -> CG on the group basis."""
    basis = list(enumerate_group(spec))
    index = {g: k for k, g in enumerate(basis)}
    F = cocycle_F(spec.n)
    size = len(basis)
    cols = []
    for g in basis:
        img = eta_group(spec, GroupAlgebraElement.basis(g), F)
        col = [0] * size
        for h, c in img.terms.items():
            col[index[h]] = c
        cols.append(col)
    mat = [[cols[j][i] for j in range(size)] for i in range(size)]
    return basis, index, mat_inverse(mat)


def phi_by_eta_inverse(spec: GroupSpec) -> dict[MonomialMatrix, GroupAlgebraElement]:
    """phi(w) = eta^{-1}(J_1(w)) for w in mu(G), computed by inverting eta on CG'."""
    tgt = target_spec(spec)
    basis, index, inv = eta_inverse_matrix(tgt)
    out = {}
    for w in enumerate_group(spec):
        j = j_map_element(Fraction(1), w)
        vec = [0] * len(basis)
        for h, c in j.terms.items():
            vec[index[h]] = c
        terms: dict = {}
        for i, row in enumerate(inv):
            s = sum((r * v for r, v in zip(row, vec) if r and v), Fraction(0))
            if s:
                add_term(terms, basis[i], s)
        out[w] = GroupAlgebraElement(terms, spec.n, spec.N)
    return out


def check_etaphi_is_j1(spec: GroupSpec) -> bool:
    """eta(phi(w)) == J_1(w) for every w, with phi built from star-words."""
    tgt = target_spec(spec)
    F = cocycle_F(spec.n)
    for w, img in phi_by_star_words(spec).items():
        if eta_group(tgt, img, F) != j_map_element(Fraction(1), w):
            return False
    return True


def check_phi_consistency(spec: GroupSpec) -> bool:
    """phi from star-words agrees with eta^{-1} J_1."""
    a = phi_by_star_words(spec)
    b = phi_by_eta_inverse(spec)
    return all(a[w] == b[w] for w in a)


def sigma_display_image(n: int, i: int, N: int) -> GroupAlgebraElement:
    """(s_i + sbar_i + sigma_i - sigma_i^{-1}) / 2."""
    from .groups import s as gen_si

    half = Fraction(1, 2)
    out: dict = {}
    sg = sigma(n, i, N)
    for g, c in ((gen_si(n, i, N), half), (sbar(n, i, N), half), (sg, half), (sg.inverse(), -half)):
        add_term(out, g, c)
    return GroupAlgebraElement(out, n, N)


__all__ = [
    "Embedding",
    "check_etaphi_is_j1",
    "check_phi_consistency",
    "phi_by_eta_inverse",
    "phi_by_star_words",
    "sigma_display_image",
    "source_spec",
    "target_params",
    "target_p",
    "target_spec",
    "unit",
    "zero",
]
