"""Characters of S_n, B_n = G(2,1,n), D_n = G(2,2,n) and mu(D_n), and their pullbacks
along the maps J_1 and J_{-i}.

B_n characters are labelled by bipartitions (lam, mu) and computed as
Ind_{B_a x B_b}(chi~_lam (x) (eps' (x) chi~_mu)) with the elementwise
induced-character formula over the enumerated group.  Here chi~ is pulled back
along the projection to S_a and eps' is the linear character t_i -> -1, s_i -> 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .groups import GroupSpec, MonomialMatrix, conjugacy_classes, enumerate_group, generators
from .hopf import GroupAlgebraElement, j_map, j_map_element, minus_i
from .linalg import RowSpace, add_term, nullspace
from .scalars import Cyclo

Partition = tuple
Bipartition = tuple


# -- partitions ---------------------------------------------------------------------------


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return out


def dual_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def bipartitions(n: int) -> list[Bipartition]:
    out = []
    for a in range(n, -1, -1):
        for lam in partitions(a):
            for mu in partitions(n - a):
                out.append((lam, mu))
    return out


def label_str(bp: Bipartition) -> str:
    def part(p):
        return "(" + ",".join(map(str, p)) + ")" if p else "()"

    return f"({part(bp[0])},{part(bp[1])})"


# -- symmetric group characters -----------------------------------------------------------


def cycle_type(perm: Iterable[int]) -> Partition:
    perm = list(perm)
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        if b - k >= 0 and (b - k) not in beta:
            between = sum(1 for c in beta if b - k < c < b)
            total += (-1) ** between * _mn((beta - {b}) | {b - k}, rest)
    return total


def sn_character(lam: Partition, rho: Partition) -> int:
    """chi_lam at cycle type rho by the Murnaghan-Nakayama rule on beta-sets."""
    if sum(lam) != sum(rho):
        raise ValueError("partition sizes differ")
    L = len(lam)
    beta = frozenset(lam[i] + (L - 1 - i) for i in range(L))
    return _mn(beta, tuple(sorted(rho, reverse=True)))


# -- B_n characters ------------------------------------------------------------------------


def _signs(g: MonomialMatrix) -> list[int]:
    return [-1 if e else 1 for e in g.exps]


def _subgroup_value(lam: Partition, mu: Partition, h: MonomialMatrix, a: int) -> int:
    """chi~_lam (x) eps' chi~_mu on an element of B_a x B_b."""
    n = h.n
    left = cycle_type(h.perm[:a]) if a else ()
    right = cycle_type([p - a for p in h.perm[a:]]) if n - a else ()
    eps = 1
    for s in _signs(h)[a:]:
        eps *= s
    return sn_character(lam, left) * eps * sn_character(mu, right)


def _in_young(h: MonomialMatrix, a: int) -> bool:
    return all((h.perm[k] < a) == (k < a) for k in range(h.n))


@dataclass(frozen=True)
class ClassFunction:
    spec: GroupSpec
    values: Mapping  # group element -> scalar

    def __call__(self, g: MonomialMatrix):
        return self.values[g]

    def at(self, a: GroupAlgebraElement):
        return sum((c * self.values[g] for g, c in a.terms.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and all(self.values[g] == other.values[g] for g in self.values) and set(
            self.values) == set(other.values)

    def __hash__(self):
        return hash(self.spec)

    def tensor(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.spec, {g: v * other.values[g] for g, v in self.values.items()})

    def restrict(self, spec: GroupSpec) -> "ClassFunction":
        return ClassFunction(spec, {g: self.values[g] for g in enumerate_group(spec)})

    def degree(self):
        return self.values[self.spec.identity()]


def _conj(v):
    return v.conjugate() if isinstance(v, Cyclo) else v


def inner(a: ClassFunction, b: ClassFunction):
    group = enumerate_group(a.spec)
    return sum((a.values[g] * _conj(b.values[g]) for g in group), Fraction(0)) / len(group)


def _b_spec(n: int, N: int) -> GroupSpec:
    return GroupSpec(2, 1, n, "reflection", N)


@lru_cache(maxsize=None)
def _bn_table(n: int, N: int) -> dict:
    spec = _b_spec(n, N)
    group = enumerate_group(spec)
    classes = conjugacy_classes(spec)
    table = {}
    for bp in bipartitions(n):
        lam, mu = bp
        a = sum(lam)
        young = [h for h in group if _in_young(h, a)]
        values = {}
        for cls in classes:
            g = cls[0]
            total = 0
            for x in group:
                h = x * g * x.inverse()
                if _in_young(h, a):
                    total += _subgroup_value(lam, mu, h, a)
            v = Fraction(total, len(young))
            for h in cls:
                values[h] = v
        table[bp] = ClassFunction(spec, values)
    return table


def bn_character(bp: Bipartition, n: int | None = None, N: int = 2) -> ClassFunction:
    n = n if n is not None else sum(bp[0]) + sum(bp[1])
    if sum(bp[0]) + sum(bp[1]) != n:
        raise ValueError("bipartition size differs from n")
    return _bn_table(n, N)[(tuple(bp[0]), tuple(bp[1]))]


def bn_table(n: int, N: int = 2) -> dict:
    return dict(_bn_table(n, N))


def linear_character(spec: GroupSpec, kind: str) -> ClassFunction:
    """eps' (t -> -1, s -> 1) or eps = det (t -> -1, s -> -1) on a B_n-type group."""
    values = {}
    for g in enumerate_group(spec):
        v = 1
        for s in _signs(g):
            v *= s
        if kind == "det":
            v *= g.perm_sign()
        elif kind != "eps_prime":
            raise ValueError(kind)
        values[g] = Fraction(v)
    return ClassFunction(spec, values)


# -- pullbacks ---------------------------------------------------------------------------------


def pullback(chi: ClassFunction, jmap: Callable[[MonomialMatrix], GroupAlgebraElement], spec: GroupSpec | None = None) -> ClassFunction:
    """g -> chi(jmap(g)) over the elements of ``spec`` (default chi's group)."""
    spec = spec or chi.spec
    return ClassFunction(spec, {g: chi.at(jmap(g)) for g in enumerate_group(spec)})


def j1(g: MonomialMatrix) -> GroupAlgebraElement:
    return j_map_element(Fraction(1), g)


def jminusi(g: MonomialMatrix) -> GroupAlgebraElement:
    return j_map_element(minus_i(g.N), g)


def find_label(chi: ClassFunction, table: Mapping) -> Bipartition | None:
    for bp, psi in table.items():
        if psi == chi:
            return bp
    return None


@dataclass
class Report:
    ok: bool
    rows: list

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": self.rows}


def verify_b_twist(n: int) -> Report:
    """chi_(lam,mu) o J_1 == chi_(lam, mu*) for every bipartition of n."""
    table = bn_table(n)
    rows = []
    ok = True
    for bp, chi in table.items():
        pulled = pullback(chi, j1)
        expect = (bp[0], dual_partition(bp[1]))
        got = find_label(pulled, table)
        good = got == expect
        ok &= good
        rows.append({"label": label_str(bp), "image": label_str(got) if got else None, "expected": label_str(expect), "ok": good})
    return Report(ok, rows)


def verify_j1_equals_jminusi(n: int) -> Report:
    """chi o J_1 == chi o J_{-i} elementwise on B_n over Q(i)."""
    table = bn_table(n, 4)
    rows = []
    ok = True
    for bp, chi in table.items():
        good = pullback(chi, j1) == pullback(chi, jminusi)
        ok &= good
        rows.append({"label": label_str(bp), "ok": good})
    return Report(ok, rows)


# -- D_n and mu(D_n) -------------------------------------------------------------------------------


def d_spec(n: int, N: int = 2) -> GroupSpec:
    return GroupSpec(2, 2, n, "reflection", N)


def mu_d_spec(n: int, N: int = 2) -> GroupSpec:
    return GroupSpec(2, 2, n, "mystic", N)


def restrict_character(chi: ClassFunction, target: GroupSpec) -> ClassFunction:
    return chi.restrict(target)


def d_labels(n: int) -> list[Bipartition]:
    """Unordered labels {lam, mu} with lam != mu (one representative each)."""
    out = []
    for lam, mu in bipartitions(n):
        if lam != mu and (mu, lam) not in out:
            out.append((lam, mu))
    return out


def verify_d_bijection(n: int) -> Report:
    """chi^{D}_(lam,mu) o J_{-i} == Res_{mu(D)} chi_(lam, mu*) and the target is irreducible."""
    N = 4
    table = bn_table(n, N)
    D, muD = d_spec(n, N), mu_d_spec(n, N)
    rows = []
    ok = True
    for lam, mu in bipartitions(n):
        if lam == mu:
            continue
        chi_d = table[(lam, mu)].restrict(D)
        pulled = pullback(chi_d, jminusi, muD)
        target_label = (lam, dual_partition(mu))
        target = table[target_label].restrict(muD)
        norm = inner(target, target)
        good = pulled == target and norm == 1
        ok &= good
        rows.append({"label": label_str((lam, mu)), "image": label_str(target_label), "norm": str(norm), "ok": good})
    return Report(ok, rows)


# -- inner automorphism witness ----------------------------------------------------------------


def left_mult_rank(X: GroupAlgebraElement, group) -> int:
    rs = RowSpace()
    for g in group:
        rs.add((X * GroupAlgebraElement.basis(g, Fraction(1))).terms)
    return rs.rank


def find_inner_witness(J: Callable[[MonomialMatrix], GroupAlgebraElement], spec: GroupSpec) -> GroupAlgebraElement | None:
    """Invertible X with J(g) X = X g for the group generators, or None."""
    group = enumerate_group(spec)
    n, N = spec.n, spec.N
    eqs = []
    for g in generators(spec):
        Jg = J(g)
        # coefficient of k in J(g) X - X g, as a linear form in the unknowns x_h
        forms: dict = {}
        for h in group:
            for a, c in Jg.terms.items():
                add_term(forms.setdefault(a * h, {}), h, c)
            add_term(forms.setdefault(h * g, {}), h, -1)
        eqs.extend(f for f in forms.values() if f)
    basis = nullspace(eqs, group)
    candidates = []
    if basis:
        total: dict = {}
        for v in basis:
            for k, c in v.items():
                add_term(total, k, c)
        candidates.append(total)
        candidates.extend(basis)
    for cand in candidates:
        X = GroupAlgebraElement(cand, n, N)
        if left_mult_rank(X, group) == len(group):
            return X
    return None


def verify_witness(J, X: GroupAlgebraElement, spec: GroupSpec) -> bool:
    return all(J(u) * X == X * GroupAlgebraElement.basis(u, Fraction(1)) for u in enumerate_group(spec))


def jminusi_after_j1(g: MonomialMatrix) -> GroupAlgebraElement:
    return j_map(minus_i(g.N), j1(g))


# -- tables and orthogonality -----------------------------------------------------------------------


def row_orthogonal(table: Mapping) -> bool:
    chars = list(table.values())
    return all(inner(a, b) == (1 if i == j else 0) for i, a in enumerate(chars) for j, b in enumerate(chars))


def column_orthogonal(table: Mapping, spec: GroupSpec) -> bool:
    classes = conjugacy_classes(spec)
    order = len(enumerate_group(spec))
    chars = list(table.values())
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            s = sum((chi(ci[0]) * _conj(chi(cj[0])) for chi in chars), Fraction(0))
            expect = Fraction(order, len(ci)) if i == j else 0
            if s != expect:
                return False
    return True


def table_json(spec: GroupSpec, table: Mapping) -> dict:
    from .groups import element_token
    from .scalars import scalar_to_json

    classes = conjugacy_classes(spec)
    reps = [c[0] for c in classes]

    def val(v):
        if isinstance(v, Fraction) and v.denominator == 1:
            return int(v)
        return str(v) if isinstance(v, Fraction) else scalar_to_json(v)

    return {
        "group": spec.to_json(),
        "classes": [element_token(g) for g in reps],
        "class_sizes": [len(c) for c in classes],
        "characters": [{"label": [list(bp[0]), list(bp[1])], "values": [val(chi(g)) for g in reps]} for bp, chi in table.items()],
    }


def d_table(n: int, N: int = 2, mystic: bool = False) -> dict:
    """Restrictions of chi_(lam,mu) to D_n (or mu(D_n)), one per pair of labels with equal restriction.

    Split labels appear with their (reducible, norm 2) restriction.
    """
    spec = mu_d_spec(n, N) if mystic else d_spec(n, N)
    table = bn_table(n, N)
    out = {}
    seen = set()
    for (lam, mu), chi in table.items():
        partner = (dual_partition(mu), dual_partition(lam)) if mystic else (mu, lam)
        if partner in seen:
            continue
        seen.add((lam, mu))
        out[(lam, mu)] = chi.restrict(spec)
    return out
