"""Pure-Python integer-matrix kernels.

These are the hot loops of the exact linear algebra layer: matrix
product, trace of a product, fraction-free (Bareiss) elimination and
the division-free (Berkowitz) characteristic polynomial.  A compiled
twin lives in ``_kernel.pyx``; both operate on plain list-of-list
matrices of Python ints and must return bit-identical results.
"""

from __future__ import annotations


def mat_mul(a, b):
    """Product of two integer matrices given as lists of rows."""
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            s = 0
            for x, y in zip(row, col):
                if x:
                    s += x * y
            out_row.append(s)
        out.append(out_row)
    return out


def trace_product(a, b):
    """Tr(a @ b) without forming the product."""
    n = len(a)
    s = 0
    for i in range(n):
        row = a[i]
        for j in range(len(row)):
            x = row[j]
            if x:
                s += x * b[j][i]
    return s


def bareiss(rows):
    """Fraction-free elimination; returns (rank, det).

    det is meaningful only for square inputs (0 when rank-deficient).
    Every interior division must be exact: a nonzero remainder means an
    arithmetic invariant is broken, so it raises instead of rounding.
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[piv], m[r] = m[r], m[piv]
            sign = -sign
        p = m[r][c]
        row_r = m[r]
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
    n = len(rows)
    v = [1, -rows[0][0]]
    for i in range(1, n):
        r = rows[i][:i]
        w = [rows[j][i] for j in range(i)]
        block = [rows[j][:i] for j in range(i)]
        # s[t] = r . block^t . w for t = 0..i-1
        s = [_dot(r, w)]
        for _ in range(i - 1):
            w = [_dot(block_row, w) for block_row in block]
            s.append(_dot(r, w))
        toep = [1, -rows[i][i]] + [-x for x in s]
        nv = [0] * (i + 2)
        for k in range(i + 2):
            acc = 0
            jmax = min(k, i + 1)
            for j in range(jmax + 1):
                if k - j < len(v):
                    acc += toep[j] * v[k - j]
            nv[k] = acc
        v = nv
    return v


def _dot(u, v):
    s = 0
    for x, y in zip(u, v):
        if x:
            s += x * y
    return s
