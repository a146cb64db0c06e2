"""Hot numeric kernels for batched 3-qubit classification.

Every kernel exists in two functionally identical versions: a scalar-loop
version compiled by numba and a vectorized pure-numpy fallback.  The
active version is chosen at import time via :mod:`slocc4.backend`.

Verdict codes used by ``tri_codes_batch``:

====  ==========
code  meaning
====  ==========
0     zero vector
1     fully separable (Sep000)
2..4  biseparable, qubit ``code-1`` in a product
5     W class
6     GHZ class
7     ambiguous (exactly two clauses true; numerically borderline)
====  ==========
"""

import numpy as np

from .backend import USE_NUMBA, jit

CODE_ZERO = 0
CODE_SEP = 1
CODE_B1 = 2
CODE_B2 = 3
CODE_B3 = 4
CODE_W = 5
CODE_GHZ = 6
CODE_AMBIGUOUS = 7


# ---------------------------------------------------------------------------
# pure-numpy versions

def _ghz_invariant_np(a):
    s = a[:, 0] * a[:, 7] - a[:, 2] * a[:, 5] + a[:, 1] * a[:, 6] - a[:, 3] * a[:, 4]
    return s * s - 4.0 * (a[:, 2] * a[:, 4] - a[:, 0] * a[:, 6]) * (
        a[:, 3] * a[:, 5] - a[:, 1] * a[:, 7]
    )


def _clause_quantities_np(a):
    q = np.empty((a.shape[0], 6), dtype=np.complex128)
    q[:, 0] = a[:, 0] * a[:, 3] - a[:, 1] * a[:, 2]
    q[:, 1] = a[:, 5] * a[:, 6] - a[:, 4] * a[:, 7]
    q[:, 2] = a[:, 1] * a[:, 4] - a[:, 0] * a[:, 5]
    q[:, 3] = a[:, 3] * a[:, 6] - a[:, 2] * a[:, 7]
    q[:, 4] = a[:, 3] * a[:, 5] - a[:, 1] * a[:, 7]
    q[:, 5] = a[:, 2] * a[:, 4] - a[:, 0] * a[:, 6]
    return q


def _tri_codes_np(a, eps):
    scale = np.abs(a).max(axis=1)
    t = _ghz_invariant_np(a)
    q = np.abs(_clause_quantities_np(a))
    thresh2 = eps * scale * scale
    c1 = (q[:, 0] > thresh2) | (q[:, 1] > thresh2)
    c2 = (q[:, 2] > thresh2) | (q[:, 3] > thresh2)
    c3 = (q[:, 4] > thresh2) | (q[:, 5] > thresh2)
    ntrue = c1.astype(np.int8) + c2 + c3
    codes = np.full(a.shape[0], CODE_SEP, dtype=np.int8)
    codes[ntrue == 3] = CODE_W
    codes[ntrue == 2] = CODE_AMBIGUOUS
    one = ntrue == 1
    codes[one & c1] = CODE_B1
    codes[one & c2] = CODE_B2
    codes[one & c3] = CODE_B3
    codes[np.abs(t) > eps * scale**4] = CODE_GHZ
    codes[scale == 0.0] = CODE_ZERO
    return codes


def _pencil_elements_np(phi0, phi1, xy):
    return xy[:, 0, None] * phi0[None, :] + xy[:, 1, None] * phi1[None, :]


# ---------------------------------------------------------------------------
# numba loop versions (same arithmetic, one point per iteration)

def _ghz_invariant_loop(a):
    n = a.shape[0]
    out = np.empty(n, dtype=np.complex128)
    for i in range(n):
        s = a[i, 0] * a[i, 7] - a[i, 2] * a[i, 5] + a[i, 1] * a[i, 6] - a[i, 3] * a[i, 4]
        out[i] = s * s - 4.0 * (a[i, 2] * a[i, 4] - a[i, 0] * a[i, 6]) * (
            a[i, 3] * a[i, 5] - a[i, 1] * a[i, 7]
        )
    return out


def _clause_quantities_loop(a):
    n = a.shape[0]
    q = np.empty((n, 6), dtype=np.complex128)
    for i in range(n):
        q[i, 0] = a[i, 0] * a[i, 3] - a[i, 1] * a[i, 2]
        q[i, 1] = a[i, 5] * a[i, 6] - a[i, 4] * a[i, 7]
        q[i, 2] = a[i, 1] * a[i, 4] - a[i, 0] * a[i, 5]
        q[i, 3] = a[i, 3] * a[i, 6] - a[i, 2] * a[i, 7]
        q[i, 4] = a[i, 3] * a[i, 5] - a[i, 1] * a[i, 7]
        q[i, 5] = a[i, 2] * a[i, 4] - a[i, 0] * a[i, 6]
    return q


def _tri_codes_loop(a, eps):
    n = a.shape[0]
    codes = np.empty(n, dtype=np.int8)
    for i in range(n):
        scale = 0.0
        for j in range(8):
            m = abs(a[i, j])
            if m > scale:
                scale = m
        if scale == 0.0:
            codes[i] = CODE_ZERO
            continue
        s = a[i, 0] * a[i, 7] - a[i, 2] * a[i, 5] + a[i, 1] * a[i, 6] - a[i, 3] * a[i, 4]
        t = s * s - 4.0 * (a[i, 2] * a[i, 4] - a[i, 0] * a[i, 6]) * (
            a[i, 3] * a[i, 5] - a[i, 1] * a[i, 7]
        )
        if abs(t) > eps * scale**4:
            codes[i] = CODE_GHZ
            continue
        thresh2 = eps * scale * scale
        c1 = (
            abs(a[i, 0] * a[i, 3] - a[i, 1] * a[i, 2]) > thresh2
            or abs(a[i, 5] * a[i, 6] - a[i, 4] * a[i, 7]) > thresh2
        )
        c2 = (
            abs(a[i, 1] * a[i, 4] - a[i, 0] * a[i, 5]) > thresh2
            or abs(a[i, 3] * a[i, 6] - a[i, 2] * a[i, 7]) > thresh2
        )
        c3 = (
            abs(a[i, 3] * a[i, 5] - a[i, 1] * a[i, 7]) > thresh2
            or abs(a[i, 2] * a[i, 4] - a[i, 0] * a[i, 6]) > thresh2
        )
        ntrue = int(c1) + int(c2) + int(c3)
        if ntrue == 3:
            codes[i] = CODE_W
        elif ntrue == 0:
            codes[i] = CODE_SEP
        elif ntrue == 2:
            codes[i] = CODE_AMBIGUOUS
        elif c1:
            codes[i] = CODE_B1
        elif c2:
            codes[i] = CODE_B2
        else:
            codes[i] = CODE_B3
    return codes


def _pencil_elements_loop(phi0, phi1, xy):
    n = xy.shape[0]
    out = np.empty((n, 8), dtype=np.complex128)
    for i in range(n):
        x = xy[i, 0]
        y = xy[i, 1]
        for j in range(8):
            out[i, j] = x * phi0[j] + y * phi1[j]
    return out


if USE_NUMBA:
    ghz_invariant_batch = jit(_ghz_invariant_loop)
    clause_quantities_batch = jit(_clause_quantities_loop)
    tri_codes_batch = jit(_tri_codes_loop)
    pencil_elements = jit(_pencil_elements_loop)
else:
    ghz_invariant_batch = _ghz_invariant_np
    clause_quantities_batch = _clause_quantities_np
    tri_codes_batch = _tri_codes_np
    pencil_elements = _pencil_elements_np
