import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg.cherednik import CherednikAlgebra, CherednikParams
from twistalg.groups import GroupSpec, enumerate_group, gen_s, s, sbar, sigma, t, torus_product
from twistalg.hopf import (
    GroupAlgebraElement,
    augmentation,
    check_cocycle,
    cocycle_F,
    drinfeld_u,
    eta_group,
    f_factor,
    gz_twist_action,
    j_map,
    j_map_element,
    kt_inverse,
    kt_mul,
    kulish_mudrov,
    minus_i,
    smash_mul,
    tensor_mul,
    trivial_cocycle,
    twisted_antipode,
    twisted_coproduct,
    twisted_group_mul,
    group_algebra_module,
)
from twistalg.monomials import monomials_up_to, polynomial_module_algebra
from twistalg.scalars import CycloContext

H2 = Fraction(1, 2)


def basis(g):
    return GroupAlgebraElement.basis(g, Fraction(1))


# -- independent triple-tensor oracle for the cocycle identity -------------------


def triple_mul(a, b):
    out = {}
    for k1, p in a.items():
        for k2, q in b.items():
            key = tuple(x ^ y for x, y in zip(k1, k2))
            out[key] = out.get(key, 0) + p * q
    return {k: v for k, v in out.items() if v}


def cocycle_oracle(F):
    F_1 = {(a, b, 0): c for (a, b), c in F.items()}
    delta_id = {(a, a, b): c for (a, b), c in F.items()}
    one_F = {(0, a, b): c for (a, b), c in F.items()}
    id_delta = {(a, b, b): c for (a, b), c in F.items()}
    ok = triple_mul(F_1, delta_id) == triple_mul(one_F, id_delta)
    left, right = {}, {}
    for (a, b), c in F.items():
        left[b] = left.get(b, 0) + c
        right[a] = right.get(a, 0) + c
    clean = lambda d: {k: v for k, v in d.items() if v}
    return ok and clean(left) == {0: 1} and clean(right) == {0: 1}


# -- group algebra ------------------------------------------------------------------


def test_ga_examples():
    s12 = basis(gen_s(2, 1, 2, 2))
    assert s12 * s12 == GroupAlgebraElement.one(2, 2)
    t1 = basis(t(2, 1, 2))
    one = GroupAlgebraElement.one(2, 2)
    assert ((one + t1) * H2) * ((one - t1) * H2) == GroupAlgebraElement.zero(2, 2)


def test_j1_s1_squares_to_one():
    j = j_map_element(Fraction(1), s(2, 1, 2))
    assert j * j == GroupAlgebraElement.one(2, 2)


def test_augmentation_examples():
    for g in enumerate_group(GroupSpec(2, 1, 2)):
        assert augmentation(basis(g)) == 1
    assert augmentation(j_map_element(Fraction(1), s(2, 1, 2))) == 1
    assert augmentation(GroupAlgebraElement.zero(2, 2)) == 0


def test_augmentation_multiplicative():
    rng = random.Random(3)
    group = enumerate_group(GroupSpec(2, 1, 2))
    for _ in range(20):
        a = GroupAlgebraElement({g: Fraction(rng.randint(-3, 3)) for g in rng.sample(group, 3)}, 2, 2)
        b = GroupAlgebraElement({g: Fraction(rng.randint(-3, 3)) for g in rng.sample(group, 3)}, 2, 2)
        assert augmentation(a * b) == augmentation(a) * augmentation(b)


# -- cocycle ----------------------------------------------------------------------------


def test_cocycle_examples():
    assert cocycle_F(1) == {(0, 0): 1}
    assert cocycle_F(2) == {(0, 0): H2, (2, 0): H2, (0, 1): H2, (2, 1): -H2}
    F = cocycle_F(2)
    assert tensor_mul(F, F) == {(0, 0): 1}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cocycle_identity(n):
    F = cocycle_F(n)
    assert check_cocycle(F)
    assert cocycle_oracle(F)
    assert tensor_mul(F, F) == {(0, 0): 1}


def test_cocycle_rejects():
    assert check_cocycle(trivial_cocycle())
    bad = {(0, 0): H2, (1, 1): H2}
    assert not check_cocycle(bad)
    assert not cocycle_oracle(bad)


def test_f_factors_commute():
    a, b = f_factor(2, 1), f_factor(3, 1)
    assert tensor_mul(a, b) == tensor_mul(b, a)


# -- twisted Hopf structure -------------------------------------------------------------------


def test_twisted_coproduct_and_antipode():
    F = cocycle_F(2)
    assert twisted_coproduct(F, {1: 1}) == {(1, 1): 1}
    assert twisted_coproduct(F, {0: 1}) == {(0, 0): 1}
    U = drinfeld_u(F)
    assert U == {0: H2, 1: H2, 2: H2, 3: -H2}
    assert kt_mul(U, U) == {0: 1}
    for n in (2, 3):
        F = cocycle_F(n)
        for mask in range(1 << n):
            assert twisted_antipode(F, {mask: 1}, n) == {mask: 1}


def test_kt_inverse():
    h = {0: Fraction(2), 1: Fraction(1)}
    assert kt_mul(h, kt_inverse(h, 1)) == {0: 1}
    with pytest.raises(ZeroDivisionError):
        kt_inverse({0: 1, 1: 1}, 1)


# -- J_c -----------------------------------------------------------------------------------------


def test_j1_formula():
    n, N = 2, 2
    s1 = s(n, 1, N)
    expect = {s1: H2, s1 * t(n, 1, N): H2, s1 * t(n, 2, N): H2, s1 * t(n, 1, N) * t(n, 2, N): -H2}
    assert j_map_element(Fraction(1), s1) == GroupAlgebraElement(expect, n, N)


def test_jminusi_formula():
    N = 4
    ctx = CycloContext(4)
    i = ctx.root(1)
    s1 = s(2, 1, N)
    expect = {s1 * t(2, 1, N): (1 - i) / 2, s1 * t(2, 2, N): (1 + i) / 2}
    assert j_map_element(minus_i(N), s1) == GroupAlgebraElement(expect, 2, N)


@pytest.mark.parametrize("c", [Fraction(1), Fraction(5, 7), Fraction(-3)])
def test_j_fixes_torus(c):
    for g in enumerate_group(GroupSpec(2, 1, 2)):
        if g.is_diagonal():
            assert j_map_element(c, g) == basis(g)


@pytest.mark.parametrize("n", [2, 3])
def test_j_inverse_pairs(n):
    group = enumerate_group(GroupSpec(2, 1, n, N=4))
    ctx = CycloContext(4)
    for c in (Fraction(1), Fraction(5, 7), minus_i(4), ctx.root(1) * 3):
        for g in group:
            assert j_map(1 / c, j_map_element(c, g)) == basis(g)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_j1_involution(n):
    for g in enumerate_group(GroupSpec(2, 1, n)):
        assert j_map(Fraction(1), j_map_element(Fraction(1), g)) == basis(g)


@pytest.mark.parametrize("c", [Fraction(1), Fraction(5, 7)])
def test_j_multiplicative_on_b3(c):
    group = enumerate_group(GroupSpec(2, 1, 3))
    rng = random.Random(11)
    for g, h in [(rng.choice(group), rng.choice(group)) for _ in range(60)]:
        assert j_map_element(c, g) * j_map_element(c, h) == j_map_element(c, g * h)


def test_j_minus_i_maps_mu_into_g():
    for m, p in [(2, 1), (2, 2), (4, 2)]:
        mu = GroupSpec(m, p, 2, "mystic", 4)
        W = GroupSpec(m, p, 2, "reflection", 4)
        for g in enumerate_group(mu):
            assert j_map_element(minus_i(4), g).members_of(W)


# -- module algebras, smash products, Kulish-Mudrov -------------------------------------------


def group_module():
    return group_algebra_module(GroupSpec(2, 1, 2))


def test_group_algebra_module_axioms():
    A = group_module()
    group = enumerate_group(GroupSpec(2, 1, 2))
    assert A.action_axioms_on(group)
    assert A.is_adjoint_on(group)
    assert A.is_module_algebra_on(itertools.product(group, repeat=2))


def test_twisted_product_associative_group():
    A = group_module()
    F = cocycle_F(2)
    group = enumerate_group(GroupSpec(2, 1, 2))
    for a, b, c in itertools.product(group, repeat=3):
        lhs = A.twisted_mul(A.twisted_mul({a: 1}, {b: 1}, F), {c: 1}, F)
        rhs = A.twisted_mul({a: 1}, A.twisted_mul({b: 1}, {c: 1}, F), F)
        assert lhs == rhs


@pytest.mark.parametrize("sign", [1, -1])
def test_twisted_product_associative_polynomial(sign):
    A = polynomial_module_algebra(3, sign)
    F = cocycle_F(3)
    monos = monomials_up_to(3, 2)
    rng = random.Random(5)
    for _ in range(60):
        a, b, c = (rng.choice(monos) for _ in range(3))
        lhs = A.twisted_mul(A.twisted_mul({a: 1}, {b: 1}, F), {c: 1}, F)
        rhs = A.twisted_mul({a: 1}, A.twisted_mul({b: 1}, {c: 1}, F), F)
        assert lhs == rhs


def test_twisted_polynomial_is_skew():
    """S(V)_F multiplies x_i * x_j = -x_j * x_i for i != j."""
    A = polynomial_module_algebra(2, 1)
    F = cocycle_F(2)
    x1, x2 = {(1, 0): 1}, {(0, 1): 1}
    assert A.twisted_mul(x1, x2, F) == {k: -v for k, v in A.twisted_mul(x2, x1, F).items()}


def test_smash_examples():
    A = polynomial_module_algebra(2, 1)
    x1 = (1, 0)
    one = (0, 0)
    assert smash_mul(A, {(one, 1): 1}, {(x1, 0): 1}) == {(x1, 1): -1}
    elem = {((1, 1), 3): Fraction(2)}
    assert smash_mul(A, {(one, 0): 1}, elem) == elem


def test_smash_associative():
    A = polynomial_module_algebra(2, 1)
    monos = monomials_up_to(2, 2)
    elems = [(a, h) for a in monos for h in range(4)]
    rng = random.Random(1)
    F = cocycle_F(2)
    for _ in range(80):
        a, b, c = ({rng.choice(elems): 1} for _ in range(3))
        assert smash_mul(A, smash_mul(A, a, b), c) == smash_mul(A, a, smash_mul(A, b, c))
        assert smash_mul(A, smash_mul(A, a, b, F), c, F) == smash_mul(A, a, smash_mul(A, b, c, F), F)


def test_kulish_mudrov_multiplicative_group():
    A = group_module()
    F = cocycle_F(2)
    group = enumerate_group(GroupSpec(2, 1, 2))
    elems = [(g, h) for g in group for h in range(4)]
    for a, b in itertools.product(elems, repeat=2):
        lhs = kulish_mudrov(A, smash_mul(A, {a: 1}, {b: 1}, F), F)
        rhs = smash_mul(A, kulish_mudrov(A, {a: 1}, F), kulish_mudrov(A, {b: 1}, F))
        assert lhs == rhs


def test_kulish_mudrov_bijective_and_examples():
    from twistalg.linalg import rank

    A = group_module()
    F = cocycle_F(2)
    group = enumerate_group(GroupSpec(2, 1, 2))
    elems = [(g, h) for g in group for h in range(4)]
    assert rank(kulish_mudrov(A, {e: 1}, F) for e in elems) == len(elems)
    ident = group[0]
    for h in range(4):
        assert kulish_mudrov(A, {(ident, h): 1}, F) == {(ident, h): 1}
    P = polynomial_module_algebra(2, 1)
    x1 = (1, 0)
    km = kulish_mudrov(P, {(x1, 0): 1}, F)
    expect = {}
    for (al, be), f in F.items():
        sgn = -1 if al & 1 else 1
        expect[(x1, be)] = expect.get((x1, be), 0) + f * sgn
    assert km == {k: v for k, v in expect.items() if v}
    inv = (2, 2)
    assert kulish_mudrov(P, {(inv, 0): 1}, F) == {(inv, 0): 1}


# -- eta ----------------------------------------------------------------------------------------------


def cherednik_b2():
    spec = GroupSpec(2, 1, 2)
    return CherednikAlgebra(spec, CherednikParams.make(spec, Fraction(1), Fraction(5, 7), {1: Fraction(3)}))


def test_eta_on_group_algebra():
    spec = GroupSpec(2, 1, 2)
    F = cocycle_F(2)
    half = H2
    expect = GroupAlgebraElement(
        {s(2, 1, 2): half, sbar(2, 1, 2): half, sigma(2, 1, 2): half, sigma(2, 1, 2).inverse(): -half}, 2, 2
    )
    assert eta_group(spec, basis(sbar(2, 1, 2)), F) == expect
    for g in enumerate_group(spec):
        if g.is_diagonal():
            assert eta_group(spec, basis(g), F) == basis(g)


def test_eta_multiplicative_group():
    spec = GroupSpec(2, 1, 2)
    F = cocycle_F(2)
    group = enumerate_group(spec)
    for a, b in itertools.product(group, repeat=2):
        lhs = eta_group(spec, twisted_group_mul(spec, basis(a), basis(b), F), F)
        assert lhs == eta_group(spec, basis(a), F) * eta_group(spec, basis(b), F)


def test_eta_on_cherednik_generators():
    H = cherednik_b2()
    A = H.module_algebra()
    F = cocycle_F(2)
    z = (0, 0)
    t1 = torus_product(2, 1, 2)
    assert A.eta({((1, 0), H.identity, z): 1}, F) == {((1, 0), H.identity, z): 1}
    assert A.eta({((0, 1), H.identity, z): 1}, F) == {((0, 1), t1, z): 1}
    assert A.eta({(z, H.identity, (0, 1)): 1}, F) == {(z, t1, (0, 1)): 1}


def test_eta_multiplicative_cherednik():
    H = cherednik_b2()
    A = H.module_algebra()
    F = cocycle_F(2)
    z = (0, 0)
    words = [((1, 0), H.identity, z), ((0, 1), H.identity, z), (z, H.identity, (1, 0)), (z, H.identity, (0, 1))]
    words += [(z, g, z) for g in enumerate_group(H.spec)]
    assert A.is_adjoint_on(words)
    for a, b in itertools.product(words, repeat=2):
        lhs = A.eta(A.twisted_mul({a: 1}, {b: 1}, F), F)
        rhs = A.mul(A.eta({a: 1}, F), A.eta({b: 1}, F))
        assert lhs == rhs


# -- GZ twisted action ----------------------------------------------------------------------------------


def test_gz_twist_trivial_and_compatible():
    P = polynomial_module_algebra(2, 1)
    monos = monomials_up_to(2, 3)

    def act(a, v):
        return P.mul({a: 1}, v)

    def act_on_module(mask, v):
        return P.act(mask, v)

    same = gz_twist_action(act, P, act_on_module, trivial_cocycle())
    F = cocycle_F(2)
    tw = gz_twist_action(act, P, act_on_module, F)
    for a in monomials_up_to(2, 1):
        for v in monos:
            assert same(a, {v: 1}) == act(a, {v: 1})
    # the twisted action is an action of the twisted algebra
    for a, b in itertools.product(monomials_up_to(2, 1), repeat=2):
        for v in monomials_up_to(2, 1):
            lhs = tw(a, tw(b, {v: 1}))
            rhs = {}
            for w, c in P.twisted_mul({a: 1}, {b: 1}, F).items():
                for k, d in tw(w, {v: 1}).items():
                    rhs[k] = rhs.get(k, 0) + c * d
            assert lhs == {k: x for k, x in rhs.items() if x}
    # invariant elements act unchanged
    inv = (2, 0)
    assert tw(inv, {(0, 1): 1}) == act(inv, {(0, 1): 1})


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4), st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_kt_mul_commutative_associative(u, v):
    a = {k: Fraction(x) for k, x in enumerate(u) if x}
    b = {k: Fraction(x) for k, x in enumerate(v) if x}
    assert kt_mul(a, b) == kt_mul(b, a)
    assert kt_mul(kt_mul(a, b), a) == kt_mul(a, kt_mul(b, a))
