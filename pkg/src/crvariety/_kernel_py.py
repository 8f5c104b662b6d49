"""Pure-Python arithmetic kernel over the Gaussian rationals.

A scalar is a normalized triple ``(a, b, d)`` of Python ints encoding
``(a + b*i) / d`` with ``d >= 1`` and ``gcd(a, b, d) == 1``.  Matrices are
lists of rows of such triples.  This module is the fallback twin of the
compiled ``_kernel_c`` extension; both expose the same functions and must
stay behaviourally identical (see tests/test_kernel.py).
"""

from math import gcd

IMPL_NAME = "pure-python"

ZERO = (0, 0, 1)
ONE = (1, 0, 1)


def qnorm(a, b, d):
    """Normalize ``(a + b*i)/d`` to canonical form."""
    if a == 0 and b == 0:
        return ZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


def qis0(x):
    return x[0] == 0 and x[1] == 0


def qadd(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return qnorm(a1 + a2, b1 + b2, d1)
    return qnorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


def qsub(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return qnorm(a1 - a2, b1 - b2, d1)
    return qnorm(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)


def qneg(x):
    return (-x[0], -x[1], x[2])


def qconj(x):
    return (x[0], -x[1], x[2])


def qmul(x, y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return qnorm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


def qinv(x):
    a, b, d = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return qnorm(d * a, -d * b, n)


def qdiv(x, y):
    return qmul(x, qinv(y))


def rref(rows, ncols):
    """Reduced row echelon form with pivots normalized to one.

    Returns ``(matrix, pivot_columns)``; zero rows sink to the bottom.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if not qis0(m[i][c]):
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        prow = m[r]
        p = prow[c]
        if p != ONE:
            pinv = qinv(p)
            for j in range(c + 1, ncols):
                if not qis0(prow[j]):
                    prow[j] = qmul(prow[j], pinv)
            prow[c] = ONE
        for i in range(nrows):
            if i == r:
                continue
            irow = m[i]
            f = irow[c]
            if qis0(f):
                continue
            for j in range(c + 1, ncols):
                pv = prow[j]
                if not qis0(pv):
                    irow[j] = qsub(irow[j], qmul(f, pv))
            irow[c] = ZERO
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows, ncols):
    """Basis of the right kernel {x : M x = 0}, one row per free column."""
    m, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [ZERO] * ncols
        v[fc] = ONE
        for k, pc in enumerate(pivots):
            if pc < fc and not qis0(m[k][fc]):
                v[pc] = qneg(m[k][fc])
        basis.append(v)
    return basis


def det(rows):
    """Exact determinant of a square matrix by fraction-full elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    result = ONE
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if not qis0(m[i][c]):
                pr = i
                break
        if pr < 0:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = qneg(result)
        crow = m[c]
        p = crow[c]
        result = qmul(result, p)
        pinv = qinv(p)
        for i in range(c + 1, n):
            irow = m[i]
            f = irow[c]
            if qis0(f):
                continue
            f = qmul(f, pinv)
            for j in range(c + 1, n):
                pv = crow[j]
                if not qis0(pv):
                    irow[j] = qsub(irow[j], qmul(f, pv))
            irow[c] = ZERO
    return result


def mat_mul(a_rows, b_rows):
    """Product of an (n x m) by an (m x p) matrix of triples."""
    n = len(a_rows)
    m = len(b_rows)
    p = len(b_rows[0]) if m else 0
    out = []
    for i in range(n):
        arow = a_rows[i]
        orow = [ZERO] * p
        for k in range(m):
            f = arow[k]
            if qis0(f):
                continue
            brow = b_rows[k]
            for j in range(p):
                bv = brow[j]
                if not qis0(bv):
                    orow[j] = qadd(orow[j], qmul(f, bv))
        out.append(orow)
    return out


def mat_inv(rows):
    """Inverse of a square matrix of triples, or None when singular."""
    n = len(rows)
    aug = [list(rows[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    m, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in m]
