"""Dense linear algebra over the prime field F_p on int64 numpy arrays.

Entries are kept in ``0..p-1``; ``p`` must be below 2**31 so products fit.
"""

from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise ValueError(f"no primitive root mod {p}")


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        factors = A[:, c].copy()
        factors[r] = 0
        A = (A - np.outer(factors, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as rows, in reduced echelon form."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(M, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, f]) % p
    if len(free) == 0:
        return basis
    return rref(basis, p)[0]


def charpoly(M: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial coefficients, highest degree first.

    Reduces to upper Hessenberg form by similarity, then runs the usual
    three-term recurrence on the leading principal minors.
    """
    H = np.array(M, dtype=np.int64) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if len(nz) == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        tinv = pow(int(H[m, m - 1]), -1, p)
        for i in range(m + 1, n):
            u = int(H[i, m - 1]) * tinv % p
            if u:
                H[i] = (H[i] - u * H[m]) % p
                H[:, m] = (H[:, m] + u * H[:, i]) % p
    # polys[k] = charpoly of leading k x k block, coefficients lowest degree first
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        # (x - h_kk) * prev
        cur = [0] * (k + 1)
        hkk = int(H[k - 1, k - 1])
        for d, c in enumerate(prev):
            cur[d + 1] = (cur[d + 1] + c) % p
            cur[d] = (cur[d] - hkk * c) % p
        t = 1
        for i in range(k - 1, 0, -1):
            t = t * int(H[i, i - 1]) % p
            coef = t * int(H[i - 1, k - 1]) % p
            if coef:
                for d, c in enumerate(polys[i - 1]):
                    cur[d] = (cur[d] - coef * c) % p
        polys.append(cur)
    return list(reversed(polys[n]))


def roots(coeffs: list[int], p: int) -> list[int]:
    """All roots in F_p, by evaluating at every field element."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in coeffs:
        acc = (acc * xs + c) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]
