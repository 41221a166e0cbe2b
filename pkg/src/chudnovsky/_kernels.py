"""Compiled inner loops for arithmetic modulo a word-sized prime.

Three reduction modes, chosen once per field:

* MODE_MERSENNE -- p = 2**61 - 1, product split into 32-bit halves and folded.
* MODE_SMALL    -- p < 2**32, the plain 64-bit product cannot overflow.
* MODE_GENERIC  -- any other p < 2**63, double-and-add (slow, always exact).

All residues are stored as uint64 in [0, p).  Numba promotes mixed
int64/uint64 arithmetic to float64, so every literal below is wrapped.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MODE_MERSENNE = 0
MODE_SMALL = 1
MODE_GENERIC = 2

_M61 = np.uint64((1 << 61) - 1)
_LO32 = np.uint64(0xFFFFFFFF)
_U0 = np.uint64(0)
_U1 = np.uint64(1)
_S3 = np.uint64(3)
_S29 = np.uint64(29)
_S32 = np.uint64(32)
_S61 = np.uint64(61)
_LO29 = np.uint64((1 << 29) - 1)


@njit(inline="always", cache=True)
def _mul_m61(a, b):
    a_lo = a & _LO32
    a_hi = a >> _S32
    b_lo = b & _LO32
    b_hi = b >> _S32
    lo = a_lo * b_lo
    mid = a_lo * b_hi + a_hi * b_lo
    hi = a_hi * b_hi
    # 2**64 == 8 and 2**61 == 1 (mod p)
    x = (hi << _S3) + (mid >> _S29) + ((mid & _LO29) << _S32) + (lo & _M61) + (lo >> _S61)
    x = (x & _M61) + (x >> _S61)
    if x >= _M61:
        x -= _M61
    return x


@njit(inline="always", cache=True)
def _add(a, b, p):
    # a, b < p < 2**63 so a + b cannot wrap
    s = a + b
    if s >= p:
        s -= p
    return s


@njit(inline="always", cache=True)
def _sub(a, b, p):
    if a >= b:
        return a - b
    return a + (p - b)


@njit(cache=True)
def _mul_generic(a, b, p):
    r = _U0
    while b:
        if b & _U1:
            r = _add(r, a, p)
        a = _add(a, a, p)
        b >>= _U1
    return r


@njit(inline="always", cache=True)
def mulmod(a, b, p, mode):
    if mode == MODE_MERSENNE:
        return _mul_m61(a, b)
    if mode == MODE_SMALL:
        return (a * b) % p
    return _mul_generic(a, b, p)


@njit(cache=True)
def powmod(a, e, p, mode):
    r = _U1
    while e:
        if e & _U1:
            r = mulmod(r, a, p, mode)
        a = mulmod(a, a, p, mode)
        e >>= _U1
    return r


@njit(cache=True)
def invmod(a, p, mode):
    return powmod(a, p - np.uint64(2), p, mode)


@njit(cache=True)
def _axpy_m61(row_full, f, piv_full, start):
    # slicing first keeps the loop index provably nonnegative, which lets
    # LLVM drop wraparound checks and vectorise
    row = row_full[start:]
    piv = piv_full[start:]
    f_lo = f & _LO32
    f_hi = f >> _S32
    two_p = _M61 << _U1
    for j in range(row.shape[0]):
        b = piv[j]
        b_lo = b & _LO32
        b_hi = b >> _S32
        lo = f_lo * b_lo
        mid = f_lo * b_hi + f_hi * b_lo
        hi = f_hi * b_hi
        x = (hi << _S3) + (mid >> _S29) + ((mid & _LO29) << _S32) + (lo & _M61) + (lo >> _S61)
        x = (x & _M61) + (x >> _S61)
        # x < 2p, so row - x + 2p lies in (0, 3p); two folds land in [0, p]
        y = row[j] + two_p - x
        y = (y & _M61) + (y >> _S61)
        y = (y & _M61) + (y >> _S61)
        row[j] = y if y != _M61 else _U0


@njit(cache=True)
def _axpy(row, f, piv, start, p, mode):
    """row[j] -= f * piv[j] for j >= start."""
    n = row.shape[0]
    if mode == MODE_MERSENNE:
        _axpy_m61(row, f, piv, start)
    elif mode == MODE_SMALL:
        for j in range(start, n):
            t = (f * piv[j]) % p
            r = row[j]
            row[j] = r - t if r >= t else r + (p - t)
    else:
        for j in range(start, n):
            row[j] = _sub(row[j], _mul_generic(f, piv[j], p), p)


@njit(cache=True)
def _reduce_block(block, basis, pivots, nb, p, mode):
    # basis-row outer: each basis row is read once per block, while the
    # block itself stays cache resident
    for i in range(nb):
        c = pivots[i]
        brow = basis[i]
        for r in range(block.shape[0]):
            f = block[r, c]
            if f != _U0:
                _axpy(block[r], f, brow, c, p, mode)


@njit(cache=True)
def absorb_block(block, basis, pivots, nb, p, mode):
    """Reduce the rows of ``block`` against the semi-echelon ``basis`` and
    append every independent row.

    ``basis[:nb]`` holds normalised rows: row i has a 1 at ``pivots[i]``,
    zeros left of it and zeros at every earlier pivot.  ``block`` is
    overwritten.  Returns the new basis size; stops early once the basis
    spans the whole row space.
    """
    ncols = basis.shape[1]
    _reduce_block(block, basis, pivots, nb, p, mode)
    start = nb
    for r in range(block.shape[0]):
        if nb == ncols:
            break
        row = block[r]
        # rows appended earlier in this block
        for i in range(start, nb):
            c = pivots[i]
            f = row[c]
            if f != _U0:
                _axpy(row, f, basis[i], c, p, mode)
        lead = -1
        for j in range(ncols):
            if row[j] != _U0:
                lead = j
                break
        if lead < 0:
            continue
        inv = invmod(row[lead], p, mode)
        for j in range(lead, ncols):
            basis[nb, j] = mulmod(row[j], inv, p, mode) if j > lead else _U1
        for j in range(lead):
            basis[nb, j] = _U0
        pivots[nb] = lead
        nb += 1
    return nb


@njit(cache=True)
def kernel_from_basis(basis, pivots, nb, free_col, p, mode):
    """Solve for the kernel vector with v[free_col] = 1 and every other
    non-pivot coordinate 0."""
    ncols = basis.shape[1]
    v = np.zeros(ncols, dtype=np.uint64)
    v[free_col] = _U1
    order = np.argsort(pivots[:nb])[::-1]
    for t in range(nb):
        i = order[t]
        c = pivots[i]
        acc = _U0
        for j in range(c + 1, ncols):
            if v[j] != _U0 and basis[i, j] != _U0:
                acc = _add(acc, mulmod(basis[i, j], v[j], p, mode), p)
        v[c] = _sub(_U0, acc, p)
    return v


@njit(cache=True)
def falling_powers(x, d, p, mode):
    """Table T[e] = x**e mod p for 0 <= e <= d."""
    t = np.empty(d + 1, dtype=np.uint64)
    t[0] = _U1
    for e in range(1, d + 1):
        t[e] = mulmod(t[e - 1], x, p, mode)
    return t


@njit(cache=True)
def derivative_rows(coords, alphas, betas, ff, p, mode):
    """Rows of partial-derivative evaluations at one affine point.

    ``coords`` are the n affine coordinates; ``alphas`` (cols x n) are the
    dehomogenised monomial exponents; ``betas`` (rows x n) the derivative
    multi-indices; ``ff[a, b]`` the falling factorial a(a-1)...(a-b+1) mod p.
    Entry (r, c) is d^beta_r x^alpha_c evaluated at the point.
    """
    n = coords.shape[0]
    nrows = betas.shape[0]
    ncols = alphas.shape[0]
    dmax = ff.shape[0] - 1
    pw = np.empty((n, dmax + 1), dtype=np.uint64)
    for i in range(n):
        pw[i] = falling_powers(coords[i], dmax, p, mode)
    out = np.zeros((nrows, ncols), dtype=np.uint64)
    for r in range(nrows):
        for c in range(ncols):
            acc = _U1
            ok = True
            for i in range(n):
                a = alphas[c, i]
                b = betas[r, i]
                if b > a:
                    ok = False
                    break
                if b > 0:
                    acc = mulmod(acc, ff[a, b], p, mode)
                acc = mulmod(acc, pw[i, a - b], p, mode)
            if ok:
                out[r, c] = acc
    return out
