# cython: language_level=3
"""Compiled integer-matrix kernels.

Mirror of ``_kernel_py``: same loops, compiled.  Entries stay Python
ints (arbitrary precision is required for exactness), so the speedup
comes from removing interpreter overhead on the index arithmetic and
loop control, not from native integer types.
"""


def mat_mul(a, b):
    """Product of two integer matrices given as lists of rows."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, t, inner, p
    bt = list(zip(*b))
    p = len(bt)
    inner = len(b)
    out = []
    for i in range(n):
        row = a[i]
        out_row = []
        for j in range(p):
            col = bt[j]
            s = 0
            for t in range(inner):
                x = row[t]
                if x:
                    s = s + x * col[t]
            out_row.append(s)
        out.append(out_row)
    return out


def trace_product(a, b):
    """Tr(a @ b) without forming the product."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, m
    s = 0
    for i in range(n):
        row = a[i]
        m = len(row)
        for j in range(m):
            x = row[j]
            if x:
                s = s + x * (b[j])[i]
    return s


def bareiss(rows):
    """Fraction-free elimination; returns (rank, det).

    det is meaningful only for square inputs (0 when rank-deficient).
    Every interior division must be exact: a nonzero remainder means an
    arithmetic invariant is broken, so it raises instead of rounding.
    """
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int sign = 1
    m = [list(x) for x in rows]
    prev = 1
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if (m[i])[c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            tmp = m[piv]
            m[piv] = m[r]
            m[r] = tmp
            sign = -sign
        row_r = m[r]
        p = row_r[c]
        for i in range(r + 1, nr):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, nc):
                num = p * row_i[j] - mic * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError(
                        "inexact division in fraction-free elimination"
                    )
                row_i[j] = q
            row_i[c] = 0
        prev = p
        r += 1
        if r == nr:
            break
    if nr == nc and r == nr:
        det = sign * prev
    else:
        det = 0
    return r, det


def berkowitz(rows):
    """Division-free characteristic polynomial of a square matrix.

    Returns the coefficients of det(xI - A), highest degree first, so
    the result is monic of length n+1.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k, t, jmax
    v = [1, -(rows[0])[0]]
    for i in range(1, n):
        r = (rows[i])[:i]
        w = [(rows[j])[i] for j in range(i)]
        block = [(rows[j])[:i] for j in range(i)]
        s = [_dot(r, w, i)]
        for t in range(i - 1):
            w = [_dot(block[j], w, i) for j in range(i)]
            s.append(_dot(r, w, i))
        toep = [1, -(rows[i])[i]] + [-x for x in s]
        nv = [0] * (i + 2)
        for k in range(i + 2):
            acc = 0
            jmax = k if k < i + 1 else i + 1
            for j in range(jmax + 1):
                if k - j < len(v):
                    acc = acc + toep[j] * v[k - j]
            nv[k] = acc
        v = nv
    return v


cdef _dot(u, v, Py_ssize_t n):
    cdef Py_ssize_t i
    s = 0
    for i in range(n):
        x = u[i]
        if x:
            s = s + x * v[i]
    return s
