# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel over the Gaussian rationals.

Behavioural twin of ``_kernel_py``: scalars are normalized int triples
``(a, b, d)`` meaning ``(a + b*i)/d``.  The integers stay arbitrary
precision (PyLong); the speedup comes from static dispatch in the row
reduction loops.
"""

from math import gcd as _gcd

IMPL_NAME = "cython"

ZERO = (0, 0, 1)
ONE = (1, 0, 1)


cpdef tuple qnorm(a, b, d):
    if a == 0 and b == 0:
        return ZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = _gcd(_gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


cpdef bint qis0(tuple x):
    return x[0] == 0 and x[1] == 0


cpdef tuple qadd(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return qnorm(a1 + a2, b1 + b2, d1)
    return qnorm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


cpdef tuple qsub(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return qnorm(a1 - a2, b1 - b2, d1)
    return qnorm(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)


cpdef tuple qneg(tuple x):
    return (-x[0], -x[1], x[2])


cpdef tuple qconj(tuple x):
    return (x[0], -x[1], x[2])


cpdef tuple qmul(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return qnorm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


cpdef tuple qinv(tuple x):
    a, b, d = x
    n = a * a + b * b
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return qnorm(d * a, -d * b, n)


cpdef tuple qdiv(tuple x, tuple y):
    return qmul(x, qinv(y))


def rref(rows, Py_ssize_t ncols):
    cdef list m = [list(r) for r in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list prow, irow
    cdef tuple p, pinv, f, pv
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if not qis0(<tuple> (<list> m[i])[c]):
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        prow = <list> m[r]
        p = <tuple> prow[c]
        if p != ONE:
            pinv = qinv(p)
            for j in range(c + 1, ncols):
                if not qis0(<tuple> prow[j]):
                    prow[j] = qmul(<tuple> prow[j], pinv)
            prow[c] = ONE
        for i in range(nrows):
            if i == r:
                continue
            irow = <list> m[i]
            f = <tuple> irow[c]
            if qis0(f):
                continue
            for j in range(c + 1, ncols):
                pv = <tuple> prow[j]
                if not qis0(pv):
                    irow[j] = qsub(<tuple> irow[j], qmul(f, pv))
            irow[c] = ZERO
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows, Py_ssize_t ncols):
    cdef Py_ssize_t fc, k
    m, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [ZERO] * ncols
        v[fc] = ONE
        for k in range(len(pivots)):
            pc = pivots[k]
            if pc < fc and not qis0(<tuple> (<list> m[k])[fc]):
                v[pc] = qneg(<tuple> (<list> m[k])[fc])
        basis.append(v)
    return basis


def det(rows):
    cdef Py_ssize_t n = len(rows)
    cdef list m = [list(r) for r in rows]
    cdef tuple result = ONE
    cdef Py_ssize_t c, i, j, pr
    cdef list crow, irow
    cdef tuple p, pinv, f, pv
    for c in range(n):
        pr = -1
        for i in range(c, n):
            if not qis0(<tuple> (<list> m[i])[c]):
                pr = i
                break
        if pr < 0:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = qneg(result)
        crow = <list> m[c]
        p = <tuple> crow[c]
        result = qmul(result, p)
        pinv = qinv(p)
        for i in range(c + 1, n):
            irow = <list> m[i]
            f = <tuple> irow[c]
            if qis0(f):
                continue
            f = qmul(f, pinv)
            for j in range(c + 1, n):
                pv = <tuple> crow[j]
                if not qis0(pv):
                    irow[j] = qsub(<tuple> irow[j], qmul(f, pv))
            irow[c] = ZERO
    return result


def mat_mul(a_rows, b_rows):
    cdef Py_ssize_t n = len(a_rows)
    cdef Py_ssize_t m = len(b_rows)
    cdef Py_ssize_t p = len(b_rows[0]) if m else 0
    cdef Py_ssize_t i, j, k
    cdef list arow, brow, orow, out
    cdef tuple f, bv
    out = []
    for i in range(n):
        arow = list(a_rows[i])
        orow = [ZERO] * p
        for k in range(m):
            f = <tuple> arow[k]
            if qis0(f):
                continue
            brow = list(b_rows[k])
            for j in range(p):
                bv = <tuple> brow[j]
                if not qis0(bv):
                    orow[j] = qadd(<tuple> orow[j], qmul(f, bv))
        out.append(orow)
    return out


def mat_inv(rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j
    aug = [list(rows[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    m, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in m]
