from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twistalg.scalars import (
    ContextMismatch,
    Cyclo,
    CycloContext,
    cyclotomic_polynomial,
    root_of_unity,
    scalar_from_json,
    scalar_to_json,
)


def _phi_oracle(m):
    # Phi_m as the product of (x - zeta^k) over primitive k, done with Mobius:
    # Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}, computed by exact poly division
    def mobius(k):
        res, p = 1, 2
        while p * p <= k:
            if k % p == 0:
                k //= p
                if k % p == 0:
                    return 0
                res = -res
            p += 1
        return -res if k > 1 else res

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def div(a, b):
        a = list(a)
        q = [0] * (len(a) - len(b) + 1)
        for k in range(len(q) - 1, -1, -1):
            c = a[k + len(b) - 1] // b[-1]
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] -= c * y
        assert not any(a)
        return q

    num, den = [1], [1]
    for d in range(1, m + 1):
        if m % d == 0:
            mu = mobius(m // d)
            f = [-1] + [0] * (d - 1) + [1]
            if mu == 1:
                num = mul(num, f)
            elif mu == -1:
                den = mul(den, f)
    return div(num, den)


@pytest.mark.parametrize("m,expected", [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1])])
def test_cyclotomic_small(m, expected):
    assert cyclotomic_polynomial(m) == expected


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_matches_mobius_oracle(m):
    assert cyclotomic_polynomial(m) == _phi_oracle(m)


def test_roots_examples():
    c2, c4 = CycloContext(2), CycloContext(4)
    assert root_of_unity(c2, 1) == -1
    assert root_of_unity(c4, 2) == -1
    assert root_of_unity(c4, 1) * root_of_unity(c4, 3) == 1
    assert root_of_unity(c4, 0) == 1


def test_field_examples():
    ctx = CycloContext(4)
    i = ctx.root(1)
    assert (1 + i) * (1 - i) == 2
    a = 3 + 2 * i
    assert a / a == 1
    assert (1 + i).inverse() == (1 - i) / 2
    assert i * i == -1


def test_division_by_zero_is_distinct():
    ctx = CycloContext(5)
    with pytest.raises(ZeroDivisionError):
        ctx.one() / ctx.zero()


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        CycloContext(4).root(1) + CycloContext(3).root(1)


def test_json_roundtrip():
    ctx = CycloContext(8)
    a = ctx.root(3) * Fraction(2, 7) + 1
    assert scalar_from_json(scalar_to_json(a)) == a
    assert scalar_to_json(Fraction(1, 2), 4) == {"m": 4, "coeffs": ["1/2", "0"]}


def test_approx_is_close():
    ctx = CycloContext(4)
    assert abs(ctx.root(1).approx() - 1j) < 1e-12


fracs = st.fractions(min_value=-49, max_value=49, max_denominator=20)


@st.composite
def elements(draw):
    m = draw(st.integers(1, 12))
    ctx = CycloContext(m)
    coeffs = draw(st.lists(fracs, min_size=ctx.degree, max_size=ctx.degree))
    return Cyclo(ctx, coeffs)


@settings(max_examples=60, deadline=None)
@given(elements())
def test_inverse_property(a):
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(-30, 30))
def test_root_order(m, k):
    ctx = CycloContext(m)
    assert root_of_unity(ctx, k) ** m == 1
    z = ctx.root(1)
    val = sum((z**j * c for j, c in enumerate(cyclotomic_polynomial(m))), ctx.zero())
    assert val == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), fracs, fracs)
def test_rational_embedding_is_ring_hom(m, p, q):
    ctx = CycloContext(m)
    assert ctx(p) + ctx(q) == ctx(p + q)
    assert ctx(p) * ctx(q) == ctx(p * q)
    assert hash(ctx(p)) == hash(p)


@settings(max_examples=30, deadline=None)
@given(elements(), st.data())
def test_field_axioms(a, data):
    ctx = a.ctx
    coeffs = data.draw(st.lists(fracs, min_size=ctx.degree, max_size=ctx.degree))
    b = Cyclo(ctx, coeffs)
    assert a * b == b * a
    assert (a + b) - b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
