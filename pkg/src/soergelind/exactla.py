"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of ``fractions.Fraction``.  Everything
here is textbook Gaussian elimination; no floating point is allowed
anywhere in the package, since the verification criteria demand exact
equality of Laurent polynomials and module maps.

The only mildly unusual routine is :func:`min_poly`, which finds the
minimal polynomial of a square matrix by looking for the first linear
dependence among the vectorized powers ``I, A, A^2, ...``.  It is used
by the idempotent-splitting code to locate rational eigenvalues of
endomorphisms.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    'Matrix',
    'zeros', 'identity', 'copy_matrix', 'transpose',
    'mat_add', 'mat_sub', 'mat_scale', 'mat_mul', 'mat_vec',
    'is_zero_matrix', 'rref', 'rank', 'nullspace', 'sparse_nullspace',
    'solve', 'solve_matrix', 'invert', 'min_poly', 'trace',
]

Matrix = list  # list[list[Fraction]]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def copy_matrix(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    c = _frac(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a @ b with exact rational entries."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(
            f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    if not a or not b:
        return zeros(len(a), len(b[0]) if b else 0)
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.

    Returns the reduced rows (zero rows dropped) together with the list
    of pivot column indices, in order.  The input is not modified.
    """
    rows = [[_frac(x) for x in row] for row in a]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        # find a pivot in column c at or below row r
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {v : a v = 0}."""
    if not a:
        return []
    ncols = len(a[0])
    red, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(a: Matrix, b: list) -> list:
    """One exact solution of a x = b; raises ValueError if inconsistent."""
    sols = solve_matrix(a, [[_frac(x)] for x in b])
    return [row[0] for row in sols]


def solve_matrix(a: Matrix, b: Matrix) -> Matrix:
    """Solve a X = B column by column (any solution; free vars set to 0)."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    nrhs = len(b[0]) if b else 0
    aug = [list(a[i]) + list(b[i]) for i in range(nrows)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:ncols]) and any(x != 0 for x in row[ncols:]):
            raise ValueError("inconsistent linear system")
    x = zeros(ncols, nrhs)
    for i, p in enumerate(pivots):
        if p < ncols:
            for j in range(nrhs):
                x[p][j] = red[i][ncols + j]
    return x


def invert(a: Matrix) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("cannot invert a non-square matrix")
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def min_poly(a: Matrix) -> list[Fraction]:
    """Minimal polynomial of a square matrix, as coefficients low to high.

    The result is monic; min_poly(zero 0x0 matrix) is [0, 1] by the
    convention that the empty operator is annihilated by x.
    """
    n = len(a)
    if n == 0:
        return [Fraction(0), Fraction(1)]
    power = identity(n)
    vecs: list[list[Fraction]] = []
    while True:
        v = [x for row in power for x in row]
        if vecs:
            # is v in the span of vecs?  solve transpose system
            try:
                coeffs = solve(transpose(vecs), v)
            except ValueError:
                coeffs = None
            if coeffs is not None and mat_vec(transpose(vecs), coeffs) == v:
                poly = [-c for c in coeffs] + [Fraction(1)]
                return poly
        vecs.append(v)
        power = mat_mul(power, a)
        if len(vecs) > n + 1:  # cannot happen: degree is at most n
            raise AssertionError("minimal polynomial search did not terminate")


def sparse_nullspace(rows: list, ncols: int) -> list:
    """Kernel basis of a sparse matrix given as dicts {col: Fraction}.

    Forward elimination keeps a dict of pivot rows keyed by pivot
    column; each incoming row is reduced against the pivots it meets
    (pivot rows only ever contain columns >= their pivot, so a single
    ascending sweep terminates).  After full back-substitution the
    non-pivot columns parametrize the kernel.  Intended for the large,
    very sparse intertwining systems of module-map solving, where dense
    elimination would be quadratically wasteful.
    """
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while True:
            hit = None
            for c in sorted(row):
                if c in pivots:
                    hit = c
                    break
            if hit is None:
                break
            coeff = row.pop(hit)
            for c2, v2 in pivots[hit].items():
                if c2 == hit:
                    continue
                nv = row.get(c2, Fraction(0)) - coeff * v2
                if nv:
                    row[c2] = nv
                else:
                    row.pop(c2, None)
        if row:
            p = min(row)
            inv = Fraction(1) / row[p]
            pivots[p] = {c: v * inv for c, v in row.items()}
    for p in sorted(pivots, reverse=True):
        prow = pivots[p]
        for q, qrow in pivots.items():
            if q >= p or p not in qrow:
                continue
            coeff = qrow.pop(p)
            for c2, v2 in prow.items():
                if c2 == p:
                    continue
                nv = qrow.get(c2, Fraction(0)) - coeff * v2
                if nv:
                    qrow[c2] = nv
                else:
                    qrow.pop(c2, None)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for p, prow in pivots.items():
            if f in prow:
                vec[p] = -prow[f]
        basis.append(vec)
    return basis
