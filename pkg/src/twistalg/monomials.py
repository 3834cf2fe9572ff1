"""Standard monomials x_1^{a_1}...x_n^{a_n} in commuting or anticommuting variables.

``sign`` is +1 for the symmetric algebra S(V) and -1 for the skew algebra
S_{-1}(V) in which x_j x_i = -x_i x_j for i != j.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .groups import MonomialMatrix

Mono = tuple


def mono_mul(a: Mono, b: Mono, sign: int) -> tuple[Mono, int]:
    """x^a * x^b = s * x^(a+b); returns (a+b, s)."""
    c = tuple(x + y for x, y in zip(a, b))
    if sign > 0:
        return c, 1
    return c, mono_mul_sign(a, b)


def mono_mul_sign(a: Mono, b: Mono) -> int:
    # each letter x_j of b moves left past the letters x_i of a with i > j
    total = 0
    suffix = 0
    for i in range(len(a) - 1, -1, -1):
        total += suffix * b[i]
        suffix += a[i]
    return -1 if total & 1 else 1


def permute_sign(perm: tuple[int, ...], a: Mono) -> int:
    """Sign of sorting x_{perm(1)}^{a_1} ... x_{perm(n)}^{a_n} into standard order (skew case)."""
    n = len(a)
    total = 0
    for k in range(n):
        if a[k] & 1:
            pk = perm[k]
            for l in range(k + 1, n):
                if a[l] & 1 and perm[l] < pk:
                    total += 1
    return -1 if total & 1 else 1


def act_mono(g: MonomialMatrix, a: Mono, sign: int, dual: bool = False) -> tuple[Mono, int, int]:
    """g(x^a) = s * zeta^e * x^{a'}; returns (a', e, s).

    With ``dual`` the variables are y's and g acts contragrediently.
    """
    n = len(a)
    out = [0] * n
    e = 0
    for k in range(n):
        ak = a[k]
        if ak:
            out[g.perm[k]] = ak
            e += ak * g.exps[k]
    if dual:
        e = -e
    s = permute_sign(g.perm, a) if sign < 0 else 1
    return tuple(out), e % g.N, s


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Mono, ...]:
    """All exponent vectors of total degree d, in descending graded-lex order (x_1 > x_2 > ...)."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        a = [0] * n
        for k in combo:
            a[k] += 1
        out.append(tuple(a))
    out.sort(reverse=True)
    return tuple(out)


def monomials_up_to(n: int, d: int) -> tuple[Mono, ...]:
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(n, k))
    return tuple(out)


def degree(a: Mono) -> int:
    return sum(a)


def unit(n: int, i: int) -> Mono:
    """Exponent vector of x_{i+1} (0-based i)."""
    return tuple(1 if k == i else 0 for k in range(n))


def zero(n: int) -> Mono:
    return (0,) * n


def mono_str(a: Mono, letter: str = "x") -> str:
    parts = []
    for k, e in enumerate(a):
        if e == 1:
            parts.append(f"{letter}{k + 1}")
        elif e:
            parts.append(f"{letter}{k + 1}^{e}")
    return "*".join(parts)


def grlex_key(a: Mono):
    """Sort key putting larger monomials (graded lex, x_1 > x_2) first."""
    return (-sum(a), tuple(-x for x in a))


def polynomial_module_algebra(n: int, sign: int = 1):
    """S(V) (sign +1) or S_{-1}(V) (sign -1) as a kT-module algebra, gamma_i > x_j = (-1)^{i=j} x_j."""
    from .hopf import ModuleAlgebra

    def mul_basis(a, b):
        c, s = mono_mul(a, b, sign)
        return {c: s}

    def act_basis(mask, a):
        odd = sum(a[k] for k in range(n) if mask >> k & 1) & 1
        return a, -1 if odd else 1

    return ModuleAlgebra(n, mul_basis, act_basis, zero(n))
