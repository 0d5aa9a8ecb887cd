"""Exact integer linear algebra.

Everything here runs over Python's arbitrary-precision integers; no floating
point is ever involved, so divisibility and unimodularity questions are
decided exactly.  Vectors are tuples of ints, matrices are tuples of row
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def content(v: Sequence[int]) -> int:
    """Greatest common divisor of the entries (0 for the zero vector).

    A nonzero vector is primitive exactly when its content is 1.
    """
    return gcd(*v) if len(v) else 0


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def primitive_part(v: Sequence[int]) -> IntVector:
    """The vector divided by its content; zero vectors pass through."""
    c = content(v)
    if c in (0, 1):
        return tuple(v)
    return tuple(x // c for x in v)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v, strict=True))


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(tuple(col) for col in zip(*m))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(m: IntMatrix, v: Sequence[int]) -> IntVector:
    return tuple(dot(row, v) for row in m)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals, by exact integer elimination."""
    if not m:
        return 0
    a = [list(row) for row in m]
    rows, cols = len(a), len(a[0])
    rk = 0
    for c in range(cols):
        pivot = next((i for i in range(rk, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[rk], a[pivot] = a[pivot], a[rk]
        for i in range(rk + 1, rows):
            if a[i][c]:
                f, p = a[i][c], a[rk][c]
                a[i] = [p * x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
        if rk == rows:
            break
    return rk


def _bezout(x: int, y: int) -> tuple[int, int, int]:
    """(p, q, g) with p*x + q*y == g == gcd(x, y) > 0."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_s, old_t, old_r


@dataclass(frozen=True)
class SmithDecomposition:
    """left @ M @ right is diagonal with the invariant factors on it.

    Factors are non-negative, each divides the next, and zero factors (rank
    deficiency) come last; both transforms have determinant +-1.
    """

    invariant_factors: tuple[int, ...]
    left_transform: IntMatrix
    right_transform: IntMatrix

    def diagonal(self, rows: int, cols: int) -> IntMatrix:
        """The rows x cols diagonal matrix carrying the factors."""
        d = self.invariant_factors
        return tuple(
            tuple(d[i] if i == j and i < len(d) else 0 for j in range(cols))
            for i in range(rows)
        )


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Classic pivoting: repeatedly move a smallest nonzero entry to the pivot
    position and clear its row and column by remainder division; a final
    sweep enforces the divisibility chain with 2x2 unimodular blocks.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(row) for row in m]
    left = [list(row) for row in identity_matrix(rows)]
    right = [list(row) for row in identity_matrix(cols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def addmul_row(src: int, dst: int, q: int) -> None:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def addmul_col(src: int, dst: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]

    limit = min(rows, cols)
    t = 0
    while t < limit:
        best: tuple[int, int] | None = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (best is None or v < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            swap_cols(t, best[1])
        while True:
            for i in range(t + 1, rows):
                if a[i][t]:
                    addmul_row(t, i, -(a[i][t] // a[t][t]))
            leftover = [i for i in range(t + 1, rows) if a[i][t]]
            if leftover:
                swap_rows(t, min(leftover, key=lambda i: abs(a[i][t])))
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    addmul_col(t, j, -(a[t][j] // a[t][t]))
            leftover = [j for j in range(t + 1, cols) if a[t][j]]
            if leftover:
                swap_cols(t, min(leftover, key=lambda j: abs(a[t][j])))
                continue
            break
        t += 1

    nonzero = t
    # Divisibility chain on the nonzero diagonal.  For adjacent entries (x, y)
    # with x not dividing y, a pair of unimodular 2x2 blocks replaces them by
    # (gcd, lcm); repeat until stable.
    changed = True
    while changed:
        changed = False
        for i in range(nonzero - 1):
            x, y = a[i][i], a[i + 1][i + 1]
            if y % x == 0:
                continue
            changed = True
            p, q, g = _bezout(x, y)
            r0 = [p * u + q * v for u, v in zip(a[i], a[i + 1])]
            r1 = [(-y // g) * u + (x // g) * v for u, v in zip(a[i], a[i + 1])]
            a[i], a[i + 1] = r0, r1
            l0 = [p * u + q * v for u, v in zip(left[i], left[i + 1])]
            l1 = [(-y // g) * u + (x // g) * v for u, v in zip(left[i], left[i + 1])]
            left[i], left[i + 1] = l0, l1
            c1 = -q * y // g
            c2 = p * x // g
            for row in a:
                u, v = row[i], row[i + 1]
                row[i], row[i + 1] = u + v, c1 * u + c2 * v
            for row in right:
                u, v = row[i], row[i + 1]
                row[i], row[i + 1] = u + v, c1 * u + c2 * v

    for i in range(nonzero):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            left[i] = [-x for x in left[i]]

    factors = tuple(a[i][i] for i in range(limit))
    return SmithDecomposition(
        factors,
        tuple(tuple(row) for row in left),
        tuple(tuple(row) for row in right),
    )


def kernel_basis(m: Sequence[Sequence[int]]) -> tuple[IntVector, ...]:
    """Basis of the integer kernel {x : M x = 0}, a saturated sublattice.

    The basis vectors are the columns of the right Smith transform beyond the
    rank, so they extend to a basis of the ambient lattice.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return ()
    if rows == 0:
        return tuple(identity_matrix(cols))
    snf = smith_normal_form(m)
    nz = sum(1 for f in snf.invariant_factors if f)
    return transpose(snf.right_transform)[nz:]


def spans_unimodular_subspace(vectors: Iterable[Sequence[int]], ambient_dim: int) -> bool:
    """True when the vectors generate a rank-len(vectors) direct summand of the lattice.

    Equivalently: the vectors extend to a basis of Z^ambient_dim, i.e. they
    are linearly independent and every Smith invariant factor equals 1.
    """
    vs = tuple(tuple(v) for v in vectors)
    if not vs:
        raise ValueError("empty generating set")
    if any(len(v) != ambient_dim for v in vs):
        raise ValueError("vector dimension does not match the ambient lattice")
    if len(vs) > ambient_dim:
        return False
    return all(f == 1 for f in smith_normal_form(vs).invariant_factors)


def cokernel(m: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """Cokernel Z^rows / im(M) of M : Z^cols -> Z^rows, as (free_rank, torsion).

    torsion lists the invariant factors greater than 1, in divisibility order.
    """
    rows = len(m)
    if rows == 0 or len(m[0]) == 0:
        return rows, ()
    factors = smith_normal_form(m).invariant_factors
    nz = [f for f in factors if f]
    return rows - len(nz), tuple(f for f in nz if f > 1)
