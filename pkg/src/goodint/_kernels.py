"""Hot inner loops, compiled with numba when available.

Each kernel exists twice: a plain-loop version (``*_loop``) that numba
compiles in nopython mode, and a vectorized numpy version (``*_numpy``).
The public name is bound to one of them at import time. Set the
environment variable ``GOODINT_DISABLE_NUMBA=1`` to force the numpy path,
e.g. to compare results or to run where numba is unavailable.

All kernels work on int64 arrays. Callers are responsible for keeping
moduli small enough that products fit (moduli below 2^31).
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

_DISABLED = os.environ.get("GOODINT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")
USE_NUMBA = HAVE_NUMBA and not _DISABLED

#: Largest modulus the int64 kernels accept.
INT64_SAFE_MODULUS = 1 << 31


def _njit(func):
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func


# ---------------------------------------------------------------------------
# witness scan: smallest k <= k_max with ell | a^k + b^k
# parity: 0 = any k, 1 = odd k only, 2 = even k only


def witness_scan_loop(a, b, ell, k_max, parity):
    x = 1 % ell
    y = 1 % ell
    for k in range(1, k_max + 1):
        x = x * a % ell
        y = y * b % ell
        if (x + y) % ell == 0:
            if parity == 0 or (parity == 1 and k % 2 == 1) or (parity == 2 and k % 2 == 0):
                return k
    return 0


def _power_table(base, count, mod):
    # base^0 .. base^(count-1) mod `mod`, by doubling
    out = np.empty(count, dtype=np.int64)
    out[0] = 1 % mod
    filled = 1
    step = base % mod
    while filled < count:
        take = min(filled, count - filled)
        out[filled : filled + take] = out[:take] * step % mod
        filled += take
        step = step * step % mod
    return out


def witness_scan_numpy(a, b, ell, k_max, parity, chunk=1 << 15):
    chunk = max(1, min(chunk, k_max))
    ta = _power_table(a, chunk, ell)
    tb = _power_table(b, chunk, ell)
    k0 = 1
    while k0 <= k_max:
        width = min(chunk, k_max - k0 + 1)
        pa = pow(int(a), k0, ell)
        pb = pow(int(b), k0, ell)
        s = (ta[:width] * pa % ell + tb[:width] * pb % ell) % ell
        ks = np.arange(k0, k0 + width)
        hit = s == 0
        if parity == 1:
            hit &= ks % 2 == 1
        elif parity == 2:
            hit &= ks % 2 == 0
        idx = np.flatnonzero(hit)
        if idx.size:
            return int(ks[idx[0]])
        k0 += width
    return 0


# ---------------------------------------------------------------------------
# multiplication in F_p[y] / (mod): x, y length k, mod monic length k + 1


def polymulmod_loop(x, y, mod, red, p):
    k = x.shape[0]
    prod = np.zeros(2 * k - 1, dtype=np.int64)
    # skip the per-step % when 2k(p-1)^2 cannot overflow
    lazy = (p - 1) * (p - 1) <= (1 << 61) // (2 * k)
    for i in range(k):
        xi = x[i]
        if xi == 0:
            continue
        if lazy:
            for j in range(k):
                prod[i + j] += xi * y[j]
        else:
            for j in range(k):
                prod[i + j] = (prod[i + j] + xi * y[j]) % p
    nz = np.empty(k, dtype=np.int64)
    nnz = 0
    for j in range(k):
        if mod[j] != 0:
            nz[nnz] = j
            nnz += 1
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        if c == 0:
            continue
        for t in range(nnz):
            j = nz[t]
            if lazy:
                prod[i - k + j] -= c * mod[j]
            else:
                prod[i - k + j] = (prod[i - k + j] - c * mod[j]) % p
    out = np.empty(k, dtype=np.int64)
    for i in range(k):
        out[i] = prod[i] % p
    return out


def polymulmod_numpy(x, y, mod, red, p):
    k = x.shape[0]
    prod = np.convolve(x, y) % p
    if k == 1:
        return prod[:1]
    return (prod[:k] + prod[k:] @ red) % p


_NO_RED = np.zeros((0, 0), dtype=np.int64)


def reduction_matrix(mod, p, needed=None):
    """Rows are y^(k+i) mod `mod` for i = 0 .. k-2, as coefficient vectors.

    Only the numpy multiply uses it; with ``needed`` false an empty
    placeholder is returned instead.
    """
    if needed is None:
        needed = not USE_NUMBA
    if not needed:
        return _NO_RED
    k = len(mod) - 1
    rows = np.zeros((max(k - 1, 0), k), dtype=np.int64)
    cur = np.array([(-c) % p for c in mod[:k]], dtype=np.int64)  # y^k
    for i in range(k - 1):
        rows[i] = cur
        top = cur[k - 1]
        nxt = np.zeros(k, dtype=np.int64)
        nxt[1:] = cur[:-1]
        nxt = (nxt - top * np.asarray(mod[:k], dtype=np.int64)) % p
        cur = nxt
    return rows


# ---------------------------------------------------------------------------
# reduced row echelon form over F_p


def _inv_mod(a, p):
    # extended Euclid; a nonzero mod p
    t, nt = 0, 1
    r, nr = p, a % p
    while nr != 0:
        qt = r // nr
        t, nt = nt, t - qt * nt
        r, nr = nr, r - qt * nr
    return t % p


def rref_mod_p_loop(mat, p):
    m = mat % p
    rows, cols = m.shape
    pivcols = np.full(min(rows, cols), -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] % p != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv_mod(m[r, c], p)
        # entries left of c in the pivot row are already zero
        nz = np.empty(cols - c, dtype=np.int64)
        nnz = 0
        for j in range(c, cols):
            m[r, j] = m[r, j] * inv % p
            if m[r, j] != 0:
                nz[nnz] = j
                nnz += 1
        for i in range(rows):
            if i != r:
                f = m[i, c] % p
                if f != 0:
                    for t in range(nnz):
                        j = nz[t]
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
        pivcols[r] = c
        r += 1
    return m, r, pivcols


def rref_mod_p_numpy(mat, p):
    m = np.asarray(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivcols = np.full(min(rows, cols), -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), -1, p) % p
        f = m[:, c].copy()
        f[r] = 0
        m = (m - np.outer(f, m[r])) % p
        pivcols[r] = c
        r += 1
    return m, r, pivcols


# ---------------------------------------------------------------------------
# reduced row echelon form over a small field given by lookup tables
# (elements are integer codes 0 .. q-1, 0 is zero, 1 is one)


def rref_table_loop(mat, add, mul, neg, inv):
    m = mat.copy()
    rows, cols = m.shape
    pivcols = np.full(min(rows, cols), -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        s = inv[m[r, c]]
        for j in range(cols):
            m[r, j] = mul[s, m[r, j]]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                f = neg[m[i, c]]
                for j in range(cols):
                    m[i, j] = add[m[i, j], mul[f, m[r, j]]]
        pivcols[r] = c
        r += 1
    return m, r, pivcols


def rref_table_numpy(mat, add, mul, neg, inv):
    m = np.asarray(mat, dtype=np.int64).copy()
    rows, cols = m.shape
    pivcols = np.full(min(rows, cols), -1, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = mul[inv[m[r, c]], m[r]]
        f = neg[m[:, c]]
        f[r] = 0
        m = add[m, mul[f[:, None], m[r][None, :]]]
        pivcols[r] = c
        r += 1
    return m, r, pivcols


# ---------------------------------------------------------------------------
# polynomial product over a small field given by lookup tables


def polymul_table_loop(f, g, add, mul, coords, p):
    out = np.zeros(f.shape[0] + g.shape[0] - 1, dtype=np.int64)
    for i in range(f.shape[0]):
        fi = f[i]
        if fi == 0:
            continue
        for j in range(g.shape[0]):
            out[i + j] = add[out[i + j], mul[fi, g[j]]]
    return out


def polymul_table_numpy(f, g, add, mul, coords, p):
    prods = mul[f[:, None], g[None, :]]
    vec = coords[prods]  # (len f, len g, m)
    idx = np.add.outer(np.arange(f.shape[0]), np.arange(g.shape[0])).ravel()
    acc = np.zeros((f.shape[0] + g.shape[0] - 1, coords.shape[1]), dtype=np.int64)
    np.add.at(acc, idx, vec.reshape(-1, coords.shape[1]))
    acc %= p
    weights = p ** np.arange(coords.shape[1], dtype=np.int64)
    return acc @ weights


# ---------------------------------------------------------------------------
# cyclotomic coset labelling: rep[i] = min of the orbit of i under x -> q x mod n


def coset_reps_loop(n, q):
    rep = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        if rep[a] >= 0:
            continue
        x = a
        while rep[x] < 0:
            rep[x] = a
            x = x * q % n
    return rep


def coset_reps_numpy(n, q):
    rep = np.arange(n, dtype=np.int64)
    perm = rep * (q % n if n > 1 else 0) % max(n, 1)
    # orbit lengths divide ord_n(q) < n, so log2(n) + 1 doublings reach every element
    for _ in range(max(1, int(n).bit_length() + 1)):
        rep = np.minimum(rep, rep[perm])
        perm = perm[perm]
    return rep



# ---------------------------------------------------------------------------
# monic gcd over F_p of two coefficient vectors (low degree first)


def _degree(v):
    d = v.shape[0] - 1
    while d >= 0 and v[d] == 0:
        d -= 1
    return d


def polygcd_mod_p_loop(a, b, p):
    x = a % p
    y = b % p
    dx = _degree(x)
    dy = _degree(y)
    while dy >= 0:
        inv = _inv_mod(y[dy], p)
        while dx >= dy:
            c = x[dx] * inv % p
            for j in range(dy + 1):
                x[dx - dy + j] = (x[dx - dy + j] - c * y[j]) % p
            while dx >= 0 and x[dx] == 0:
                dx -= 1
        x, y = y, x
        dx, dy = dy, dx
    if dx < 0:
        return np.zeros(0, dtype=np.int64)
    inv = _inv_mod(x[dx], p)
    out = np.empty(dx + 1, dtype=np.int64)
    for i in range(dx + 1):
        out[i] = x[i] * inv % p
    return out


def polygcd_mod_p_numpy(a, b, p):
    x = np.asarray(a, dtype=np.int64) % p
    y = np.asarray(b, dtype=np.int64) % p
    x = x[: _degree(x) + 1]
    y = y[: _degree(y) + 1]
    while y.shape[0]:
        inv = pow(int(y[-1]), -1, p)
        dy = y.shape[0] - 1
        while x.shape[0] > dy:
            c = x[-1] * inv % p
            shift = x.shape[0] - 1 - dy
            x[shift:] = (x[shift:] - c * y) % p
            x = x[: _degree(x) + 1]
        x, y = y, x
    if not x.shape[0]:
        return x
    return x * pow(int(x[-1]), -1, p) % p

KERNELS = ("witness_scan", "polymulmod", "rref_mod_p", "rref_table", "polymul_table", "coset_reps", "polygcd_mod_p")

if HAVE_NUMBA:
    witness_scan_jit = _njit(witness_scan_loop)
    polymulmod_jit = _njit(polymulmod_loop)
    _inv_mod = _njit(_inv_mod)
    rref_mod_p_jit = _njit(rref_mod_p_loop)
    rref_table_jit = _njit(rref_table_loop)
    polymul_table_jit = _njit(polymul_table_loop)
    coset_reps_jit = _njit(coset_reps_loop)
    _degree = _njit(_degree)
    polygcd_mod_p_jit = _njit(polygcd_mod_p_loop)


def implementations(name: str, jit: bool):
    """Return the jit or numpy implementation of a kernel by name."""
    if name not in KERNELS:
        raise KeyError(name)
    if jit:
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        return globals()[f"{name}_jit"]
    return globals()[f"{name}_numpy"]


witness_scan = implementations("witness_scan", USE_NUMBA)
polymulmod = implementations("polymulmod", USE_NUMBA)
rref_mod_p = implementations("rref_mod_p", USE_NUMBA)
rref_table = implementations("rref_table", USE_NUMBA)
polymul_table = implementations("polymul_table", USE_NUMBA)
coset_reps = implementations("coset_reps", USE_NUMBA)
polygcd_mod_p = implementations("polygcd_mod_p", USE_NUMBA)
