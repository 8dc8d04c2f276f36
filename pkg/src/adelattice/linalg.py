"""Exact rational linear algebra.

Small dense routines over Python ints / Fractions.  Rank and determinant
decisions sit exactly on degeneracy boundaries, so nothing here may ever
touch floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def bareiss_determinant(rows) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [[int(x) for x in r] for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _echelon(rows):
    """Row echelon form over Q; returns (matrix, pivot column list)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rational_rank(rows) -> int:
    """Rank over Q."""
    _, pivots = _echelon(rows)
    return len(pivots)


def solve_rational(a_rows, b):
    """One solution of A x = b over Q (free variables set to 0), or None."""
    if not a_rows:
        return None
    n_cols = len(a_rows[0])
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    m, pivots = _echelon(aug)
    if n_cols in pivots:
        return None  # inconsistent: pivot in the constant column
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = m[r][n_cols]
    return x


def nullspace_rational(a_rows):
    """Basis of the right kernel of A over Q."""
    if not a_rows:
        return []
    n_cols = len(a_rows[0])
    m, pivots = _echelon(a_rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def invert_rational(a_rows):
    """Inverse of a square matrix over Q; raises on singular input."""
    n = len(a_rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a_rows)]
    m, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def primitive_integer_vector(vec):
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no primitive form")
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints
