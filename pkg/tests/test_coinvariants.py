import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg import coinvariants as co
from twistalg.coinvariants import (
    FiniteAlgebra,
    SkewPoly,
    check_ideal_equality,
    check_phi_intertwines_actions,
    check_restricted_iso_even_case,
    check_restricted_twist,
    check_twisted_coinvariant_product,
    coinvariant_character,
    coinvariant_quotient,
    free_algebra_dimension,
    gamma_element,
    graded_ideal,
    hilbert_series_check,
    invariant_generators,
    is_invariant,
    klein_algebra,
    klein_z,
    mystic_klein_algebra,
    phi_map,
    rank_one_algebra,
    rank_one_relations,
    rank_one_z,
    reg_char_intertwine_check,
    regular_character,
    same_rowspace,
    skew_mul,
    split_idempotents,
    check_idempotent_splitting,
    trace_invariance_check,
    trace_pair,
    random_group_algebra_element,
    verify_not_isom_witness,
)
from twistalg.groups import GroupSpec, enumerate_group, sigma, t
from twistalg.hopf import GroupAlgebraElement
from twistalg.linalg import RowSpace
from twistalg.monomials import grlex_key


def P(n, sign, a, c=1):
    return SkewPoly.monomial(n, sign, a, c)


# -- skew multiplication -----------------------------------------------------------------


def brute_sign(a, b):
    """Sort the letter word x^a x^b by adjacent swaps; distinct letters anticommute."""
    word = [i for i, e in enumerate(a) for _ in range(e)] + [i for i, e in enumerate(b) for _ in range(e)]
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    return sign


def test_skew_mul_examples():
    x1, x2 = SkewPoly.variable(2, -1, 1), SkewPoly.variable(2, -1, 2)
    assert x2 * x1 == P(2, -1, (1, 1), -1)
    assert x1 * x1 == P(2, -1, (2, 0))
    m = P(2, -1, (1, 1))
    assert m * m == P(2, -1, (2, 2), -1)
    assert SkewPoly.variable(2, 1, 2) * SkewPoly.variable(2, 1, 1) == P(2, 1, (1, 1))


monos3 = st.tuples(*[st.integers(0, 3)] * 3)


@settings(max_examples=80, deadline=None)
@given(monos3, monos3)
def test_skew_sign_matches_bubble_sort(a, b):
    prod = P(3, -1, a) * P(3, -1, b)
    (k, v), = prod.terms.items()
    assert k == tuple(x + y for x, y in zip(a, b))
    assert v == brute_sign(a, b)


@settings(max_examples=40, deadline=None)
@given(monos3, monos3, monos3)
def test_skew_mul_associative(a, b, c):
    A, B, C = P(3, -1, a), P(3, -1, b), P(3, -1, c)
    assert (A * B) * C == A * (B * C)


def test_mutated_product_differs():
    x1, x2 = SkewPoly.variable(2, -1, 1), SkewPoly.variable(2, -1, 2)
    assert skew_mul(x2, x1, "opposite") == P(2, -1, (1, 1))


# -- invariants ---------------------------------------------------------------------------------


def test_invariant_generator_examples():
    g = invariant_generators(2, 2, 2)
    assert g[0] == P(2, 1, (2, 0)) + P(2, 1, (0, 2))
    assert g[1] == P(2, 1, (1, 1))
    g = invariant_generators(2, 1, 2)
    assert g[1] == P(2, 1, (2, 2))
    assert len(invariant_generators(2, 1, 1)) == 1


@pytest.mark.parametrize("m,p,n", [(2, 1, 1), (2, 1, 2), (2, 2, 2), (4, 2, 2), (4, 4, 2), (2, 2, 3), (3, 1, 2)])
def test_generators_invariant(m, p, n):
    for f in invariant_generators(m, p, n, 1):
        assert is_invariant(f, GroupSpec(m, p, n))
        assert is_invariant(f, GroupSpec(m, p, n), dual=True)
    if m % 2 == 0:
        for f in invariant_generators(m, p, n, -1):
            assert is_invariant(f, GroupSpec(m, p, n, "mystic"))


def test_x1x2_skew_invariant_under_sigma():
    f = P(2, -1, (1, 1))
    assert f.act(sigma(2, 1, 2)) == f
    # in the commutative algebra sigma sends x1 x2 to -x1 x2
    assert P(2, 1, (1, 1)).act(sigma(2, 1, 2)) == P(2, 1, (1, 1), -1)


def test_hilbert_series():
    assert hilbert_series_check(2, 2, 2)
    assert hilbert_series_check(4, 2, 2)
    assert free_algebra_dimension([2, 2], 4) == 3


# -- ideals -----------------------------------------------------------------------------------


def test_graded_ideal_example():
    comps = graded_ideal(invariant_generators(2, 2, 2, -1), -1, 3)
    assert comps[2].rank == 2
    expect = RowSpace(key=grlex_key).extend([{(2, 0): 1, (0, 2): 1}, {(1, 1): 1}])
    assert same_rowspace(comps[2], expect)
    assert comps[0].rank == comps[1].rank == 0


@pytest.mark.parametrize("m,p,n", [(2, 2, 2), (2, 1, 2), (4, 2, 2), (2, 2, 3)])
@pytest.mark.parametrize("sign", [1, -1])
def test_left_multiples_span_two_sided(m, p, n, sign):
    gens = invariant_generators(m, p, n, sign)
    left = graded_ideal(gens, sign, 4)
    both = graded_ideal(gens, sign, 4, two_sided=True)
    assert all(same_rowspace(a, b) for a, b in zip(left, both))


@pytest.mark.parametrize("m,p,n", [(2, 2, 2), (2, 1, 2), (4, 2, 2)])
def test_ideal_equality(m, p, n):
    assert check_ideal_equality(m, p, n, D=6)


# -- quotients and characters ----------------------------------------------------------------------


def q_integer_product(degrees):
    """Coefficients of prod_i (1 + t + ... + t^{d_i - 1})."""
    out = [1]
    for d in degrees:
        new = [0] * (len(out) + d - 1)
        for i, c in enumerate(out):
            for k in range(d):
                new[i + k] += c
        out = new
    return out


@pytest.mark.parametrize("spec", [
    GroupSpec(2, 1, 1), GroupSpec(2, 1, 2), GroupSpec(2, 2, 2), GroupSpec(3, 1, 2), GroupSpec(4, 2, 2),
    GroupSpec(2, 2, 2, "mystic"), GroupSpec(2, 1, 2, "mystic"), GroupSpec(4, 2, 2, "mystic"), GroupSpec(2, 2, 3, "mystic"),
], ids=lambda s: s.label())
def test_quotient_dims_and_regular_character(spec):
    q = coinvariant_quotient(spec)
    assert q.graded_dims == q_integer_product(co.generator_degrees(spec.m, spec.p, spec.n))
    assert q.total_dim == spec.order()
    assert coinvariant_character(q, spec) == regular_character(spec)


def test_quotient_examples():
    q = coinvariant_quotient(GroupSpec(2, 2, 2, "mystic"))
    assert q.graded_dims == [1, 2, 1]
    assert q.basis_by_degree[2] == ((0, 2),)
    assert coinvariant_quotient(GroupSpec(2, 1, 1)).graded_dims == [1, 1]
    spec = GroupSpec(2, 2, 2, "mystic")
    ch = coinvariant_character(q, spec)
    assert ch(spec.identity()) == 4
    assert ch(sigma(2, 1, 2)) == 0
    g = GroupSpec(2, 1, 2)
    assert coinvariant_character(coinvariant_quotient(g), g)(t(2, 1, 2)) == 0


def test_quotient_ideal_stable():
    for spec in (GroupSpec(2, 2, 2, "mystic"), GroupSpec(2, 1, 2), GroupSpec(4, 2, 2, "mystic")):
        assert co.ideal_is_stable(coinvariant_quotient(spec), spec)


def test_quotient_product_independent_of_representative():
    q = coinvariant_quotient(GroupSpec(2, 1, 2, "mystic"))
    rng = random.Random(3)
    gens = invariant_generators(2, 1, 2, -1)
    for _ in range(20):
        a = rng.choice(q.basis)
        b = rng.choice(q.basis)
        M = P(2, -1, rng.choice(q.basis))
        shifted = (P(2, -1, a) + M * rng.choice(gens)).terms
        assert q.mul(shifted, {b: 1}) == q.mul({a: 1}, {b: 1})
        assert q.mul({b: 1}, shifted) == q.mul({b: 1}, {a: 1})


# -- twisted products, traces, phi -----------------------------------------------------------------


@pytest.mark.parametrize("m,p,n", [(2, 2, 2), (2, 1, 2), (4, 2, 2)])
def test_twisted_coinvariant_product(m, p, n):
    assert check_twisted_coinvariant_product(m, p, n)


def test_twisted_product_mutation():
    assert not check_twisted_coinvariant_product(2, 1, 2, mutate="opposite")
    # at (2,2,2) every mixed product x1 x2 lies in the ideal, so the mutation is invisible
    assert check_twisted_coinvariant_product(2, 2, 2, mutate="opposite")


def test_degree_zero_product():
    q = coinvariant_quotient(GroupSpec(2, 2, 2, "mystic"))
    zero = (0, 0)
    assert q.mul({zero: 1}, {zero: 1}) == {zero: 1}


@pytest.mark.parametrize("m,p,n", [(2, 2, 2), (2, 1, 2)])
def test_trace_invariance_random(m, p, n):
    spec = GroupSpec(m, p, n)
    q = coinvariant_quotient(spec)
    rng = random.Random(11)
    for _ in range(20):
        assert trace_invariance_check(q, spec, random_group_algebra_element(spec, rng))


def test_trace_examples():
    spec = GroupSpec(2, 2, 2)
    q = coinvariant_quotient(spec)
    one = GroupAlgebraElement.one(2, 2)
    assert trace_pair(q, spec, one) == (4, 4)
    for g in enumerate_group(spec):
        if g.is_diagonal():
            a = GroupAlgebraElement.basis(g)
            assert trace_invariance_check(q, spec, a)
    img = phi_map(2, 2, 2)[sigma(2, 1, 2)]
    plain, twisted = trace_pair(q, spec, img)
    assert plain == twisted == 0


def test_trace_differs_from_plain_action_matrix():
    # the twisted action is a different operator even though traces agree
    spec = GroupSpec(2, 1, 2)
    q = coinvariant_quotient(spec)
    tw = co.twisted_group_action(q, spec)
    g = enumerate_group(spec)[1:]
    assert any(q.matrix(lambda v, h=h: q.act(h, v)) != q.matrix(lambda v, h=h: tw(h, v)) for h in g)


@pytest.mark.parametrize("m,p,n", [(2, 1, 2), (2, 2, 2), (4, 2, 2)])
def test_reg_char_intertwine(m, p, n):
    assert reg_char_intertwine_check(m, p, n)
    phi = phi_map(m, p, n)
    W = GroupSpec(m, p, n, "mystic")
    ident = GroupSpec(m, p, n).identity()
    assert phi[W.identity()].coefficient(ident) == 1
    assert phi[sigma(n, 1, m)].coefficient(ident) == 0


@pytest.mark.parametrize("m,p,n", [(2, 1, 2), (2, 2, 2), (4, 2, 2)])
def test_phi_intertwines_actions(m, p, n):
    assert check_phi_intertwines_actions(m, p, n)


# -- finite algebras --------------------------------------------------------------------------------


def truncated_polynomial_algebra(coeffs):
    """Q[T]/(f) for monic f given low to high."""
    d = len(coeffs) - 1

    def mul(i, j):
        vec = [Fraction(0)] * (2 * d)
        vec[i + j] = Fraction(1)
        for k in range(2 * d - 1, d - 1, -1):
            c = vec[k]
            if c:
                vec[k] = 0
                for l in range(d):
                    vec[k - d + l] -= c * coeffs[l]
        return {k: v for k, v in enumerate(vec[:d]) if v}

    return FiniteAlgebra(list(range(d)), mul, {0: Fraction(1)})


def test_commutative_center_is_everything():
    A = truncated_polynomial_algebra([0, 0, 0, 1])
    assert len(A.center()) == 3
    assert A.associativity_failures() == 0


def test_minimal_polynomial_and_splitting():
    A = truncated_polynomial_algebra([Fraction(-1), 0, 1])  # Q x Q
    assert A.minimal_polynomial({1: 1}) == [-1, 0, 1]
    idems = split_idempotents(A, [{0: 1}, {1: 1}])
    assert idems is not None and check_idempotent_splitting(A, idems, [{0: 1}, {1: 1}])
    B = truncated_polynomial_algebra([Fraction(1), 0, 1])  # Q(i)
    assert split_idempotents(B, [{0: 1}, {1: 1}]) is None


# -- restricted algebras ---------------------------------------------------------------------------


@pytest.mark.parametrize("c", [Fraction(1), Fraction(5, 7)])
def test_rank_one_presentation(c):
    A = rank_one_algebra(c)
    assert A.dim == 8
    assert all(rank_one_relations(A, c).values())
    assert A.associativity_failures() == 0
    Z = A.center()
    assert len(Z) == 2
    z = rank_one_z(A, c)
    assert A.is_central(z)
    assert A.mul(z, z) == A.scalar(c * c)


def test_klein_algebra():
    C = klein_algebra(1)
    assert C.dim == 64
    Z = C.center(C.generators())
    assert len(Z) == 4 == len(rank_one_algebra(1).center()) ** 2
    z1, z2 = klein_z(C, 1)
    assert C.is_central(z1) and C.is_central(z2)
    assert C.mul(z1, z1) == C.one and C.mul(z2, z2) == C.one
    half = Fraction(1, 2)
    explicit = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            e1 = {k: v * half for k, v in co.add_into(dict(C.one), z1, s1).items()}
            e2 = {k: v * half for k, v in co.add_into(dict(C.one), z2, s2).items()}
            explicit.append(C.mul(e1, e2))
    assert check_idempotent_splitting(C, explicit, Z)
    found = split_idempotents(C, Z)
    assert sorted(map(sorted, (e.items() for e in found))) == sorted(map(sorted, (e.items() for e in explicit)))


def test_klein_associativity_sample():
    C = klein_algebra(Fraction(5, 7))
    rng = random.Random(5)
    triples = [tuple(rng.choice(C.labels) for _ in range(3)) for _ in range(3000)]
    assert C.associativity_failures(triples) == 0


def test_mystic_klein_algebra():
    B = mystic_klein_algebra(1)
    assert B.dim == 64
    assert len(B.center(B.generators())) == 4
    rng = random.Random(6)
    triples = [tuple(rng.choice(B.labels) for _ in range(3)) for _ in range(2000)]
    assert B.associativity_failures(triples) == 0


def test_center_generators_agree_with_full_basis():
    A = rank_one_algebra(1)
    assert len(A.center(A.generators())) == len(A.center())


# -- gamma and the non-isomorphism witness ------------------------------------------------------------


def test_gamma_fixture_checksum(monkeypatch):
    assert "x1^2*y1^2" in co.gamma_text()
    monkeypatch.setattr(co, "GAMMA_SHA256", "0" * 64)
    with pytest.raises(ValueError):
        co.gamma_text()


def test_gamma_identities():
    B = mystic_klein_algebra(1)
    g = gamma_element(B, 1)
    assert B.is_central(g)
    g2 = B.mul(g, g)
    assert not co.is_scalar(B, g2)
    assert B.mul(g2, g2) == B.one


def test_gamma_reading_matters():
    """gamma with sigma^-1 in place of sigma, or with the opposite parameter, is not central."""
    from twistalg.syntax import parse_element

    B = mystic_klein_algebra(1)
    g = B.from_element(parse_element(B.H, co.gamma_text(), {"c": Fraction(1), "sigma": sigma(2, 1, 2).inverse()}))
    assert not B.is_central(g)
    B2 = mystic_klein_algebra(-1)
    assert not B2.is_central(gamma_element(B2, 1))


def test_gamma_minimal_polynomial_value():
    """The computed minimal polynomial of gamma at c = 1 is (T - 1)(T^2 + 1), a proper divisor of T^4 - 1."""
    B = mystic_klein_algebra(1)
    mp = B.minimal_polynomial(gamma_element(B, 1), 8)
    assert mp == [-1, 1, -1, 1]


def test_gamma_general_parameter():
    """For general c the minimal polynomial is (T - c^2)(T^2 + c^2), so gamma^4 is scalar only at c = +-1."""
    c = Fraction(5, 7)
    B = mystic_klein_algebra(c)
    g = gamma_element(B, c)
    assert B.is_central(g)
    assert B.minimal_polynomial(g, 8) == [-(c**4), c**2, -(c**2), 1]
    g2 = B.mul(g, g)
    assert not co.is_scalar(B, B.mul(g2, g2))


def test_not_isom_report():
    report = verify_not_isom_witness(1)
    status = {r["check"]: r["status"] for r in report.rows}
    failing = [k for k, v in status.items() if v == "fail"]
    assert failing == ["minimal polynomial of gamma is T^4 - c^4"]
    assert not report.ok


# -- isomorphisms of restricted algebras ---------------------------------------------------------------


def test_even_case_isomorphism():
    assert check_restricted_iso_even_case(2, 1, 1)
    assert check_restricted_iso_even_case(2, 1, 2)
    assert not check_restricted_iso_even_case(2, 1, 2, mutate="sign")
    with pytest.raises(ValueError):
        check_restricted_iso_even_case(2, 2, 2)


@pytest.mark.parametrize("c", [Fraction(1), Fraction(5, 7)])
def test_restricted_twist(c):
    assert check_restricted_twist(2, 2, 2, c)
    assert not check_restricted_twist(2, 2, 2, c, braided_c=c)


def test_restricted_twist_b2():
    assert check_restricted_twist(2, 1, 2, 1)
