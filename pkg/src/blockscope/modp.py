"""Dense linear algebra over a small prime field, on int64 numpy arrays."""
from __future__ import annotations

import numpy as np


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form modulo p; returns (nonzero rows, pivot columns)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if len(others):
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : mat @ x = 0} modulo p."""
    mat = np.asarray(mat, dtype=np.int64)
    n = mat.shape[1]
    red, piv = rref(mat, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, c in enumerate(piv):
            basis[t, c] = (-red[r, f]) % p
    return basis


def charpoly(mat: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial modulo p, low-to-high coefficients, via Hessenberg form."""
    h = np.array(mat, dtype=np.int64) % p
    n = h.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(h[m:, m - 1])
        if not len(nz):
            continue
        i = m + int(nz[0])
        if i != m:
            h[[i, m]] = h[[m, i]]
            h[:, [i, m]] = h[:, [m, i]]
        inv = pow(int(h[m, m - 1]), -1, p)
        for i in range(m + 1, n):
            u = int(h[i, m - 1]) * inv % p
            if u:
                h[i] = (h[i] - u * h[m]) % p
                h[:, m] = (h[:, m] + u * h[:, i]) % p
    # p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for k in range(n):
        nxt = np.zeros(k + 2, dtype=np.int64)
        nxt[1:] = polys[k]
        nxt[:k + 1] = (nxt[:k + 1] - h[k, k] * polys[k]) % p
        t = 1
        for i in range(k - 1, -1, -1):
            t = t * int(h[i + 1, i]) % p
            if not t:
                break
            coef = t * int(h[i, k]) % p
            if coef:
                nxt[:i + 1] = (nxt[:i + 1] - coef * polys[i]) % p
        polys.append(nxt % p)
    return [int(c) for c in polys[n]]


def roots(poly: list[int], p: int) -> list[int]:
    """All roots in F_p, by evaluating at every field element."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.flatnonzero(acc == 0)]
