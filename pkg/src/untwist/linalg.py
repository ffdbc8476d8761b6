"""Exact integer and Laurent-polynomial matrix algebra.

Integer matrices are plain lists of lists of ints (row-major), matching
their JSON serialization.  Laurent matrices are lists of lists of
:class:`~untwist.laurent.LaurentPoly`.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CapacityError,
    DimensionError,
    InfiniteCokernelError,
    SingularMatrixError,
)
from .laurent import ONE, ZERO, LaurentPoly

MAX_LAURENT_DET_SIZE = 16


def shape(m):
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise DimensionError("ragged matrix")
    return rows, cols


def _require_square(m):
    rows, cols = shape(m)
    if rows != cols:
        raise DimensionError(f"expected a square matrix, got {rows}x{cols}")
    return rows


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    """Product of two matrices over any commutative ring with ``0`` as additive identity."""
    n, k = shape(a)
    k2, p = shape(b)
    if k != k2 and n and p:
        raise DimensionError(f"cannot multiply {n}x{k} by {k2}x{p}")
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = 0
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_symmetric(m):
    n = _require_square(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def det_int(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _require_square(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- Laurent matrices --------------------------------------------------------


def laurent_matrix(rows):
    """Coerce a nested list of ints / polynomials into a Laurent matrix."""
    return [[x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in r] for r in rows]


def is_hermitian(m):
    n = _require_square(m)
    return all(m[i][j] == m[j][i].involute() for i in range(n) for j in range(i + 1))


def evaluate_matrix(m, x):
    """Substitute ``t = x`` entrywise."""
    return [[entry.evaluate(x) for entry in row] for row in m]


def det_laurent(m):
    """Exact determinant over Z[t, t^-1] by Laplace expansion with memoized minors.

    Works row by row over column subsets, so the cost is n * 2^(n-1)
    polynomial products rather than n!.
    """
    n = _require_square(m)
    if n > MAX_LAURENT_DET_SIZE:
        raise CapacityError(f"Laurent determinant limited to size {MAX_LAURENT_DET_SIZE}, got {n}")
    if n == 0:
        return ONE
    # minors[mask] = det of the submatrix on the last popcount(mask) rows and columns in mask
    minors = {0: ONE}
    for depth in range(1, n + 1):
        row = m[n - depth]
        nxt = {}
        for mask, sub in minors.items():
            if sub.is_zero():
                continue
            # columns of ``mask`` are already used; extend with one more, leftmost position first
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = row[j]
                if entry.is_zero():
                    continue
                # sign = parity of the number of used columns to the left of j
                left = bin(mask & (bit - 1)).count("1")
                term = entry * sub
                if left % 2:
                    term = -term
                key = mask | bit
                nxt[key] = nxt.get(key, ZERO) + term
        minors = nxt
    return minors.get((1 << n) - 1, ZERO)


# -- Smith normal form -------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ W == D`` with ``U``, ``W`` unimodular.

    ``U_inv`` and ``W_inv`` are the exact inverses, tracked during the
    elimination so that cokernel generators can be pulled back without a
    second inversion.
    """

    D: list
    U: list
    W: list
    U_inv: list
    W_inv: list
    invariant_factors: list

    @property
    def rank(self):
        return len(self.invariant_factors)


def smith_normal_form(m):
    """Smith normal form with transformation matrices.

    Pivots on the entry of smallest nonzero absolute value.  The diagonal
    of ``D`` is nonnegative, each nonzero entry divides the next, and zero
    entries trail.
    """
    rows, cols = shape(m)
    a = [list(map(int, r)) for r in m]
    U, U_inv = identity(rows), identity(rows)
    W, W_inv = identity(cols), identity(cols)

    # Row op "row_i += c*row_j" on A and U; on U_inv the inverse column op.
    def add_row(i, j, c):
        if c == 0:
            return
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]
        for r in U_inv:
            r[j] -= c * r[i]

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]
        for r in U_inv:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in U_inv:
            r[i] = -r[i]

    # Column op "col_j += c*col_i" on A and W; on W_inv the inverse row op.
    def add_col(j, i, c):
        if c == 0:
            return
        for r in a:
            r[j] += c * r[i]
        for r in W:
            r[j] += c * r[i]
        W_inv[i] = [x - c * y for x, y in zip(W_inv[i], W_inv[j])]

    def swap_cols(i, j):
        if i == j:
            return
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in W:
            r[i], r[j] = r[j], r[i]
        W_inv[i], W_inv[j] = W_inv[j], W_inv[i]

    for s in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(s, rows):
                for j in range(s, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(s, pivot[0])
            swap_cols(s, pivot[1])
            p = a[s][s]
            clean = True
            for i in range(s + 1, rows):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // p))
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, cols):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // p))
                    clean = clean and a[s][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(s + 1, rows) for j in range(s + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(s, bad, 1)
        if s < rows and s < cols and a[s][s] < 0:
            negate_row(s)

    factors = [a[i][i] for i in range(min(rows, cols)) if a[i][i] != 0]
    return SmithDecomposition(D=a, U=U, W=W, U_inv=U_inv, W_inv=W_inv, invariant_factors=factors)


def cokernel_invariants(m):
    """Invariant factors > 1 of Z^n / M Z^n for square nonsingular ``m``."""
    n = _require_square(m)
    snf = smith_normal_form(m)
    if snf.rank < n:
        raise InfiniteCokernelError("matrix is singular; the cokernel is infinite")
    return [d for d in snf.invariant_factors if d > 1]


def solve_rational(m, b):
    """Solve ``m @ x == b`` exactly over Q."""
    n = _require_square(m)
    if len(b) != n:
        raise DimensionError(f"right-hand side has length {len(b)}, expected {n}")
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]
