"""Registry of executable checks behind ``twistalg verify``.

Each check returns ``(ok, details)``.  Checks declare the largest group
order, algebra dimension and degree they touch so that caps can skip them
before any work is done.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import characters as ch
from . import coinvariants as co
from .cherednik import BRAIDED, CherednikAlgebra, CherednikParams, zeta_keys
from .embedding import Embedding, check_etaphi_is_j1, check_phi_consistency, source_spec
from .factorisation import twist_factorisation_check
from .groups import GroupSpec, enumerate_group, s, sbar, sigma, torus_product
from .hopf import (
    GroupAlgebraElement,
    check_cocycle,
    cocycle_F,
    eta_group,
    group_algebra_module,
    kulish_mudrov,
    smash_mul,
    tensor_mul,
    twisted_group_mul,
)
from .standard import check_standard_module_twist, linear_rep, trivial_rep

DEFAULT_CAPS = {"group": 10_000, "dim": 256, "degree": 12}


@dataclass
class Options:
    triple: tuple[int, int, int] | None = None
    c_values: tuple = (Fraction(1), Fraction(5, 7))
    caps: dict = field(default_factory=lambda: dict(DEFAULT_CAPS))
    seed: int = 0

    def triples(self, default):
        return [self.triple] if self.triple else list(default)


@dataclass
class Check:
    name: str
    anchor: str
    run: Callable[[Options], tuple[bool, str]]
    size: Callable[[Options], dict] = lambda opts: {}


REGISTRY: dict[str, Check] = {}


def register(name: str, anchor: str, size=None):
    def deco(fn):
        REGISTRY[name] = Check(name, anchor, fn, size or (lambda opts: {}))
        return fn

    return deco


def _order(m, p, n):
    return GroupSpec(m, p, n).order()


def _max_order(opts, default):
    return max(_order(*t) for t in opts.triples(default))


def _basis(g):
    return GroupAlgebraElement.basis(g, Fraction(1))


def _t(triple) -> str:
    return "(" + ",".join(map(str, triple)) + ")"


def _fmt(items) -> str:
    return ", ".join(items)


# -- Hopf layer ----------------------------------------------------------------------------


@register("cocycle", "counital 2-cocycle F on the torus T = (Z/2)^n, with F^2 = 1")
def _cocycle(opts):
    bad = [n for n in range(1, 5) if not (check_cocycle(cocycle_F(n)) and tensor_mul(cocycle_F(n), cocycle_F(n)) == {(0, 0): 1})]
    return not bad, f"n = 1..4; failures at {bad}" if bad else "n = 1..4"


@register("kulish-mudrov", "smash-product isomorphism (A_F # H_F) -> (A # H) for A = CG(2,1,2)",
          lambda opts: {"group": 8})
def _kulish_mudrov(opts):
    spec = GroupSpec(2, 1, 2)
    A = group_algebra_module(spec)
    F = cocycle_F(2)
    group = enumerate_group(spec)
    elems = [(g, h) for g in group for h in range(4)]
    bad = 0
    for a, b in itertools.product(elems, repeat=2):
        lhs = kulish_mudrov(A, smash_mul(A, {a: 1}, {b: 1}, F), F)
        rhs = smash_mul(A, kulish_mudrov(A, {a: 1}, F), kulish_mudrov(A, {b: 1}, F))
        bad += lhs != rhs
    return not bad, f"{len(elems) ** 2} basis pairs, {bad} failures"


@register("eta", "eta: (CG)_F -> CG and (H_c)_F -> H_c are algebra maps with the displayed generator images",
          lambda opts: {"group": 8})
def _eta(opts):
    spec = GroupSpec(2, 1, 2)
    F = cocycle_F(2)
    group = enumerate_group(spec)
    mult = all(
        eta_group(spec, twisted_group_mul(spec, _basis(a), _basis(b), F), F) == eta_group(spec, _basis(a), F) * eta_group(spec, _basis(b), F)
        for a, b in itertools.product(group, repeat=2)
    )
    H = CherednikAlgebra(spec, CherednikParams.make(spec, Fraction(1), opts.c_values[-1], {1: Fraction(3)}))
    A = H.module_algebra()
    z = (0, 0)
    t1 = torus_product(2, 1, 2)
    images = (
        A.eta({((1, 0), H.identity, z): 1}, F) == {((1, 0), H.identity, z): 1}
        and A.eta({((0, 1), H.identity, z): 1}, F) == {((0, 1), t1, z): 1}
        and all(eta_group(spec, _basis(g), F) == _basis(g) for g in group if g.is_diagonal())
    )
    half = Fraction(1, 2)
    sb = GroupAlgebraElement({s(2, 1, 2): half, sbar(2, 1, 2): half, sigma(2, 1, 2): half, sigma(2, 1, 2).inverse(): -half}, 2, 2)
    images = images and eta_group(spec, _basis(sbar(2, 1, 2)), F) == sb
    words = [((1, 0), H.identity, z), ((0, 1), H.identity, z), (z, H.identity, (1, 0)), (z, H.identity, (0, 1))]
    words += [(z, g, z) for g in group]
    cher = all(
        A.eta(A.twisted_mul({a: 1}, {b: 1}, F), F) == A.mul(A.eta({a: 1}, F), A.eta({b: 1}, F))
        for a, b in itertools.product(words, repeat=2)
    )
    return mult and images and cher, f"group pairs {mult}, generator images {images}, Cherednik generator pairs {cher}"


@register("psi-twist", "the factorisation map Psi of H_c(G(2,1,2)) twists to Psi_F", lambda opts: {"degree": 2})
def _psi(opts):
    spec = GroupSpec(2, 1, 2)
    res = []
    for c in opts.c_values:
        H = CherednikAlgebra(spec, CherednikParams.make(spec, Fraction(1), c, {1: Fraction(2)}))
        res.append((c, twist_factorisation_check(H, 2)))
    return all(ok for _, ok in res), _fmt(f"c={c}: {ok}" for c, ok in res)


# -- embedding --------------------------------------------------------------------------------


def _embedding(m, p, n, c):
    spec = source_spec(m, p, n)
    params = CherednikParams.make(spec, Fraction(1), c, {k: Fraction(2 + k) for k in zeta_keys(spec)}, BRAIDED)
    return Embedding.build(m, p, n, params)


EMBED_DEFAULT = [(2, 1, 2), (2, 2, 2), (4, 2, 2)]


@register("embedding", "the braided Cherednik algebra of mu(G(m,p,n)) embeds into H_c(G(m,p',n))",
          lambda opts: {"group": _max_order(opts, EMBED_DEFAULT), "degree": 2})
def _embedding_check(opts):
    rows, ok = [], True
    for m, p, n in opts.triples(EMBED_DEFAULT):
        if m % 2 or n < 2:
            return False, f"({m},{p},{n}) needs m even and n >= 2"
        for c in opts.c_values:
            E = _embedding(m, p, n, c)
            bad = E.check_relations()
            good = not bad
            if (m // p) % 2 == 0:
                good = good and E.is_bijective_up_to(2)
            ok &= good
            rows.append(f"({m},{p},{n}) c={c}: {good}")
    return ok, _fmt(rows)


@register("phi", "phi from star-words agrees with eta^-1 J_1, and eta phi = J_1 on the group")
def _phi(opts):
    specs = [source_spec(2, 1, 2, 4), source_spec(2, 2, 2, 4), source_spec(4, 2, 2)]
    res = [(sp.label(), check_phi_consistency(sp) and check_etaphi_is_j1(sp)) for sp in specs]
    return all(ok for _, ok in res), _fmt(f"{l}: {ok}" for l, ok in res)


# -- characters --------------------------------------------------------------------------------


@register("b-twist", "chi_(lam,mu) o J_1 = chi_(lam,mu*) on B_n", lambda opts: {"group": 48})
def _b_twist(opts):
    res = [(n, ch.verify_b_twist(n)) for n in (1, 2, 3)]
    return all(r.ok for _, r in res), _fmt(f"n={n}: {len(r.rows)} characters" for n, r in res)


@register("j1-jminusi", "chi o J_1 = chi o J_{-i} on B_n", lambda opts: {"group": 48})
def _j1_jminusi(opts):
    res = [(n, ch.verify_j1_equals_jminusi(n).ok) for n in (1, 2, 3)]
    return all(ok for _, ok in res), _fmt(f"n={n}: {ok}" for n, ok in res)


@register("d-bijection", "pullback along J_{-i} sends irreducible characters of D_n to those of mu(D_n)",
          lambda opts: {"group": 48})
def _d_bijection(opts):
    res = [(n, ch.verify_d_bijection(n)) for n in (2, 3)]
    return all(r.ok for _, r in res), _fmt(f"n={n}: {len(r.rows)} labels with lam != mu" for n, r in res)


@register("inner-witness", "J_{-i} J_1 is inner on Q(i)B_2", lambda opts: {"group": 8})
def _inner(opts):
    spec = GroupSpec(2, 1, 2, N=4)
    X = ch.find_inner_witness(ch.jminusi_after_j1, spec)
    ok = X is not None and ch.verify_witness(ch.jminusi_after_j1, X, spec)
    return ok, f"witness with {len(X.terms)} terms" if X is not None else "no witness"


# -- standard modules ---------------------------------------------------------------------------


@register("standard-module", "phi-pullback of the twisted standard module of tau is the braided standard module of tau o J_{-i}",
          lambda opts: {"group": 8, "degree": 2})
def _standard(opts):
    rows, ok = [], True
    for name, rep in (("trivial", trivial_rep), ("sign", linear_rep(-1, -1))):
        for c in opts.c_values:
            r = check_standard_module_twist(2, 1, 2, rep, 2, c1=c, c_zeta={2: Fraction(3)})
            ok &= r.ok
            rows.append(f"{name} c={c}: {r.ok}")
    return ok, _fmt(rows)


# -- coinvariants -------------------------------------------------------------------------------


COINV_DEFAULT = [(2, 1, 1), (2, 1, 2), (2, 2, 2), (4, 2, 2)]


@register("coinvariant-regular", "coinvariant algebras of G and mu(G) carry the regular representation",
          lambda opts: {"group": _max_order(opts, COINV_DEFAULT)})
def _coinv(opts):
    rows, ok = [], True
    for m, p, n in opts.triples(COINV_DEFAULT):
        flavors = ["reflection"] + (["mystic"] if m % 2 == 0 and n >= 2 else [])
        for fl in flavors:
            spec = GroupSpec(m, p, n, fl)
            q = co.coinvariant_quotient(spec)
            good = co.coinvariant_character(q, spec) == co.regular_character(spec)
            ok &= good
            rows.append(f"{spec.label()} dims {q.graded_dims}: {good}")
    return ok, _fmt(rows)


TWIST_DEFAULT = [(2, 2, 2), (2, 1, 2), (4, 2, 2)]


def _even_triples(opts, default):
    out = opts.triples(default)
    for m, p, n in out:
        if m % 2 or n < 2:
            raise ValueError(f"({m},{p},{n}) needs m even and n >= 2")
    return out


@register("ideal-equality", "the invariant ideals of S(V) and S_{-1}(V) coincide and are T-stable",
          lambda opts: {"group": _max_order(opts, TWIST_DEFAULT), "degree": 6})
def _ideal(opts):
    res = [((m, p, n), co.check_ideal_equality(m, p, n, D=6)) for m, p, n in _even_triples(opts, TWIST_DEFAULT)]
    return all(ok for _, ok in res), _fmt(f"{_t(t)}: {ok}" for t, ok in res)


@register("twisted-product", "the coinvariant algebra of mu(G) is the F-twist of that of G",
          lambda opts: {"group": _max_order(opts, TWIST_DEFAULT)})
def _twisted_product(opts):
    res = [((m, p, n), co.check_twisted_coinvariant_product(m, p, n)) for m, p, n in _even_triples(opts, TWIST_DEFAULT)]
    return all(ok for _, ok in res), _fmt(f"{_t(t)}: {ok}" for t, ok in res)


@register("trace-invariance", "Tr(a acting) = Tr(a acting through F) on the coinvariant algebra",
          lambda opts: {"group": _max_order(opts, [(2, 2, 2), (2, 1, 2)])})
def _trace(opts):
    rng = random.Random(opts.seed)
    rows, ok = [], True
    for m, p, n in _even_triples(opts, [(2, 2, 2), (2, 1, 2)]):
        spec = GroupSpec(m, p, n)
        q = co.coinvariant_quotient(spec)
        good = all(co.trace_invariance_check(q, spec, co.random_group_algebra_element(spec, rng)) for _ in range(20))
        ok &= good
        rows.append(f"({m},{p},{n}) 20 random elements: {good}")
    return ok, _fmt(rows)


@register("regular-character", "chi_CG o phi = chi_CW elementwise",
          lambda opts: {"group": _max_order(opts, [(2, 1, 2), (2, 2, 2), (4, 2, 2)])})
def _reg_char(opts):
    res = [(t, co.reg_char_intertwine_check(*t)) for t in _even_triples(opts, [(2, 1, 2), (2, 2, 2), (4, 2, 2)])]
    return all(ok for _, ok in res), _fmt(f"{_t(t)}: {ok}" for t, ok in res)


@register("phi-action", "phi intertwines the W-action with the twisted G-action on coinvariants",
          lambda opts: {"group": _max_order(opts, [(2, 1, 2), (2, 2, 2)])})
def _phi_action(opts):
    res = [(t, co.check_phi_intertwines_actions(*t)) for t in _even_triples(opts, [(2, 1, 2), (2, 2, 2)])]
    return all(ok for _, ok in res), _fmt(f"{_t(t)}: {ok}" for t, ok in res)


@register("hilbert-series", "invariants of S_{-1}(V) have the Hilbert series of a free commutative algebra",
          lambda opts: {"group": _max_order(opts, [(2, 2, 2), (4, 2, 2)]), "degree": 12})
def _hilbert(opts):
    res = [(t, co.hilbert_series_check(*t)) for t in _even_triples(opts, [(2, 2, 2), (4, 2, 2)])]
    return all(ok for _, ok in res), _fmt(f"{_t(t)}: {ok}" for t, ok in res)


# -- restricted algebras -------------------------------------------------------------------------


@register("restricted-dims", "restricted algebras: the 8-dimensional rank-one presentation and 64-dimensional Klein algebras",
          lambda opts: {"dim": 64})
def _restricted(opts):
    rows, ok = [], True
    for c in opts.c_values:
        A = co.rank_one_algebra(c)
        rel = co.rank_one_relations(A, c)
        C, B = co.klein_algebra(c), co.mystic_klein_algebra(c)
        zA, zC = len(A.center()), len(C.center(C.generators()))
        good = A.dim == 8 and all(rel.values()) and C.dim == B.dim == 64 and zA == 2 and zC == 4
        ok &= good
        rows.append(f"c={c}: dims {A.dim}/{C.dim}/{B.dim}, centres {zA}/{zC}, relations {all(rel.values())}")
    return ok, _fmt(rows)


_MINPOLY_ROW = "minimal polynomial of gamma is T^4 - c^4"


@register("not-isom", "z and gamma witnesses: central z with z^2 = c^2, central gamma with gamma^2 not scalar and gamma^4 = c^4, split centre",
          lambda opts: {"dim": 64})
def _not_isom(opts):
    rep = co.verify_not_isom_witness(1)
    rows = [r for r in rep.rows if r["check"] != _MINPOLY_ROW]
    bad = [r["check"] for r in rows if r["status"] != "pass"]
    return not bad, f"c=1: {len(rows) - len(bad)}/{len(rows)} sub-assertions pass" + (f"; failing: {bad}" if bad else "")


@register("gamma-minpoly", "minimal polynomial of gamma over Q is T^4 - c^4", lambda opts: {"dim": 64})
def _gamma_minpoly(opts):
    rep = co.verify_not_isom_witness(1)
    row = next(r for r in rep.rows if r["check"] == _MINPOLY_ROW)
    return row["status"] == "pass", "c=1: " + row["details"]


def _restricted_dim(m, p, n) -> int:
    return _order(m, p, n) ** 3


def _within_dim_cap(opts, triples):
    keep = [t for t in triples if _restricted_dim(*t) <= opts.caps["dim"]]
    skipped = [f"{_t(t)} skipped: dim {_restricted_dim(*t)} > cap {opts.caps['dim']}" for t in triples if t not in keep]
    return keep, skipped


@register("even-case-iso", "eta is an isomorphism (restricted H_c)_F -> restricted H_c when m/p is even",
          lambda opts: {"dim": 8})
def _even(opts):
    keep, skipped = _within_dim_cap(opts, [(2, 1, 1), (2, 1, 2)])
    res = [(t, co.check_restricted_iso_even_case(*t)) for t in keep]
    return all(ok for _, ok in res), _fmt([f"{_t(t)}: {ok}" for t, ok in res] + skipped)


@register("restricted-twist", "phi extends to an isomorphism from the restricted braided algebra of mu(G) onto the restricted H_c(G)_F",
          lambda opts: {"dim": 64})
def _restricted_twist(opts):
    keep, skipped = _within_dim_cap(opts, [(2, 2, 2), (2, 1, 2)])
    rows, ok = [], True
    for t in keep:
        for c in opts.c_values[:1] if t == (2, 1, 2) else opts.c_values:
            good = co.check_restricted_twist(*t, c)
            ok &= good
            rows.append(f"{_t(t)} c={c}: {good}")
    return ok, _fmt(rows + skipped)


# -- running ------------------------------------------------------------------------------------


def _over_cap(size: dict, caps: dict) -> list[str]:
    return [f"{k} {v} > cap {caps[k]}" for k, v in sorted(size.items()) if v > caps.get(k, v)]


def run_check(name: str, opts: Options | None = None) -> dict:
    opts = opts or Options()
    chk = REGISTRY[name]
    try:
        over = _over_cap(chk.size(opts), opts.caps)
    except ValueError as exc:
        return {"name": name, "anchor": chk.anchor, "status": "fail", "details": str(exc)}
    if over:
        return {"name": name, "anchor": chk.anchor, "status": "skipped", "details": "; ".join(over)}
    try:
        ok, details = chk.run(opts)
    except ValueError as exc:
        ok, details = False, f"error: {exc}"
    return {"name": name, "anchor": chk.anchor, "status": "pass" if ok else "fail", "details": details}


def run(selector: str = "all", opts: Options | None = None) -> dict:
    """Run one check or all of them; raises KeyError for unknown names."""
    if selector != "all" and selector not in REGISTRY:
        raise KeyError(selector)
    names = list(REGISTRY) if selector == "all" else [selector]
    checks = [run_check(n, opts) for n in names]
    overall = all(c["status"] == "pass" for c in checks if c["status"] != "skipped")
    return {"checks": checks, "overall": overall}


REPORT_SCHEMA = {
    "type": "object",
    "required": ["checks", "overall"],
    "additionalProperties": False,
    "properties": {
        "overall": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "anchor", "status", "details"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "anchor": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "details": {"type": "string"},
                },
            },
        },
    },
}
