"""Exact linear algebra over the rationals.

Small dense routines on tuples-of-tuples of ``Fraction``; everything here is
exact, no pivoting heuristics beyond "first nonzero".  Matrices are immutable
(tuples), vectors are tuples.  Sizes in this package stay tiny (ranks <= ~10,
graded pieces <= ~130), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def matrix(rows: Iterable[Iterable]) -> Mat:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Mat:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def zeros(rows: int, cols: int) -> Mat:
    return tuple((ZERO,) * cols for _ in range(rows))


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Mat) -> Mat:
    c = frac(c)
    return tuple(tuple(c * x for x in r) for r in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    bt = tuple(zip(*b)) if b else ()
    return tuple(
        tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt) for ra in a
    )


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a)


def vec_mat(v: Vec, a: Mat) -> Vec:
    if a and len(v) != len(a):
        raise ValueError("dimension mismatch")
    cols = len(a[0]) if a else 0
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(cols))


def dot(u: Vec, v: Vec) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), ZERO)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def bracket(a: Mat, b: Mat) -> Mat:
    """Commutator [a, b] = ab - ba."""
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def kron(a: Mat, b: Mat) -> Mat:
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    return tuple(
        tuple(a[i][k] * b[j][l] for k in range(ca) for l in range(cb))
        for i in range(ra)
        for j in range(rb)
    )


def kron_vec(u: Vec, v: Vec) -> Vec:
    return tuple(x * y for x in u for y in v)


def rref(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[0])


def solve(a: Mat, b: Vec) -> Vec | None:
    """One solution of ``a x = b``, or None if inconsistent."""
    n, m = len(a), len(a[0]) if a else 0
    aug = [tuple(a[i]) + (frac(b[i]),) for i in range(n)]
    red, pivots = rref(aug)
    if m in pivots:
        return None
    x = [ZERO] * m
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [tuple(a[i]) + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(row[n:] for row in red)


class RowSpace:
    """Incremental row-space basis: feed vectors, keep an rref basis.

    Used for reachability/observability reductions and bracket closures;
    remembers which fed vectors were accepted as new directions.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []  # rref form
        self.pivots: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = [frac(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert ``v``; True if it enlarged the span."""
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False
        inv = ONE / v[p]
        v = [x * inv for x in v]
        for row in self.rows:
            if row[p] != 0:
                f = row[p]
                row[:] = [x - f * y for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(v))
