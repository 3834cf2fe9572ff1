"""Exact sparse linear algebra over Q or Q(zeta_m).

Vectors are dicts mapping a hashable column label to a nonzero scalar.  All
routines only use field operations, so they work for ``Fraction`` and
:class:`~twistalg.scalars.Cyclo` entries alike.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping

Vector = dict


def add_into(acc: dict, vec: Mapping, coef=1) -> dict:
    """acc += coef * vec, dropping zeros.  Returns ``acc``."""
    for k, v in vec.items():
        val = acc.get(k, 0) + coef * v
        if val:
            acc[k] = val
        elif k in acc:
            del acc[k]
    return acc


def add_term(acc: dict, key, value) -> None:
    val = acc.get(key, 0) + value
    if val:
        acc[key] = val
    elif key in acc:
        del acc[key]


def scale(vec: Mapping, coef) -> dict:
    if not coef:
        return {}
    return {k: coef * v for k, v in vec.items()}


def prune(vec: Mapping) -> dict:
    return {k: v for k, v in vec.items() if v}


def vec_equal(a: Mapping, b: Mapping) -> bool:
    return not add_into(dict(a), b, -1)


class RowSpace:
    """Incrementally maintained reduced row echelon form.

    ``key`` orders columns; the pivot of a row is its nonzero column with the
    smallest key.  Every stored row has a 1 in its pivot column and zeros in
    all other pivot columns.
    """

    def __init__(self, key: Callable[[Hashable], object] | None = None):
        self.key = key
        self.rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = dict(vec)
        for col in [c for c in v if c in self.rows]:
            coef = v.get(col)
            if coef:
                add_into(v, self.rows[col], -coef)
        return v

    def _pivot(self, v: Mapping):
        if self.key is None:
            return next(iter(v))
        return min(v, key=self.key)

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True iff it was independent."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = self._pivot(v)
        inv = 1 / v[piv]
        v = {k: c * inv for k, c in v.items()}
        for other in self.rows.values():
            coef = other.get(piv)
            if coef:
                add_into(other, v, -coef)
        self.rows[piv] = v
        return True

    def extend(self, vecs: Iterable[Mapping]) -> "RowSpace":
        for v in vecs:
            self.add(v)
        return self

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> list:
        return sorted(self.rows, key=self.key) if self.key else list(self.rows)


def rank(vectors: Iterable[Mapping]) -> int:
    return RowSpace().extend(vectors).rank


def nullspace(equations: Iterable[Mapping], unknowns: Iterable[Hashable]) -> list[dict]:
    """Basis of {z : sum_u eq[u] * z[u] = 0 for every equation}.

    Each equation is a dict over the unknown labels.
    """
    unknowns = list(unknowns)
    order = {u: i for i, u in enumerate(unknowns)}
    rs = RowSpace(key=order.__getitem__).extend(equations)
    basis = []
    for f in unknowns:
        if f in rs.rows:
            continue
        sol = {f: 1}
        for p, row in rs.rows.items():
            c = row.get(f)
            if c:
                sol[p] = -c
        basis.append(sol)
    return basis


def solve(equations: list[tuple[Mapping, object]], unknowns: Iterable[Hashable]) -> dict | None:
    """One solution of the affine system ``eq . z = rhs``, or None."""
    rhs_key = object()
    rows = []
    for eq, rhs in equations:
        row = dict(eq)
        if rhs:
            row[rhs_key] = -rhs
        rows.append(row)
    unknowns = list(unknowns)
    order = {u: i for i, u in enumerate(unknowns)}
    order[rhs_key] = len(unknowns)
    rs = RowSpace(key=order.__getitem__).extend(rows)
    if rhs_key in rs.rows:
        return None
    sol = {}
    for p, row in rs.rows.items():
        c = row.get(rhs_key)
        if c:
            sol[p] = -c
    return sol


# -- small dense helpers --------------------------------------------------------


def mat_mul(a: list[list], b: list[list]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                x = a[i][t]
                if x:
                    y = b[t][j]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out


def mat_vec(a: list[list], v: list) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), 0) for row in a]


def identity(n: int, one=1) -> list[list]:
    return [[one if i == j else 0 for j in range(n)] for i in range(n)]


def mat_inverse(a: list[list]) -> list[list]:
    """Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def dense_rank(a: list[list]) -> int:
    return rank({j: x for j, x in enumerate(row) if x} for row in a)


def mat_equal(a: list[list], b: list[list]) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)) and len(a) == len(b)
