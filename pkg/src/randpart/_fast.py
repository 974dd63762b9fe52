"""Numba-compiled inner loops for sampling.

Pure array code so the hot paths (row insertion at N ~ 1e4, MCMC chains of
1e8 steps) stay off the Python interpreter.  The surrounding modules keep
reference implementations in plain Python for the small exact checks.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def rsk_row_lengths(perm):
    """Shape of the insertion tableau of perm (any distinct int sequence).

    Pass k strips off row k: elements bumped out of the current row form
    the input sequence for the next row.
    """
    n = perm.size
    shape = np.empty(n, np.int64)
    if n == 0:
        return shape[:0]
    nrows = 0
    work = perm.copy()
    row = np.empty(n, perm.dtype)
    bumped = np.empty(n, perm.dtype)
    cur_len = n
    while cur_len > 0:
        rlen = 0
        blen = 0
        for idx in range(cur_len):
            x = work[idx]
            lo = 0
            hi = rlen
            while lo < hi:
                mid = (lo + hi) >> 1
                if row[mid] > x:
                    hi = mid
                else:
                    lo = mid + 1
            if lo == rlen:
                row[rlen] = x
                rlen += 1
            else:
                bumped[blen] = row[lo]
                blen += 1
                row[lo] = x
        shape[nrows] = rlen
        nrows += 1
        for idx in range(blen):
            work[idx] = bumped[idx]
        cur_len = blen
    return shape[:nrows].copy()


@njit(cache=True, nogil=True)
def rsk_shapes_batch(perms):
    """Row-length matrix (zero padded) for a batch of permutations."""
    m, n = perms.shape
    out = np.zeros((m, n), np.int64)
    for r in range(m):
        sh = rsk_row_lengths(perms[r])
        for i in range(sh.size):
            out[r, i] = sh[i]
    return out


@njit(cache=True, nogil=True)
def _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j):
    L = H.shape[0]
    c = i * L + j
    h = H[i, j]

    ok_add = True
    if i > 0 and H[i - 1, j] <= h:
        ok_add = False
    if j > 0 and H[i, j - 1] <= h:
        ok_add = False

    ok_rem = h > 0
    if ok_rem and i + 1 < L and H[i + 1, j] >= h:
        ok_rem = False
    if ok_rem and j + 1 < L and H[i, j + 1] >= h:
        ok_rem = False

    in_add = add_pos[c] >= 0
    if ok_add and not in_add:
        add_pos[c] = counts[0]
        add_list[counts[0]] = c
        counts[0] += 1
    elif not ok_add and in_add:
        p = add_pos[c]
        last = add_list[counts[0] - 1]
        add_list[p] = last
        add_pos[last] = p
        add_pos[c] = -1
        counts[0] -= 1

    in_rem = rem_pos[c] >= 0
    if ok_rem and not in_rem:
        rem_pos[c] = counts[1]
        rem_list[counts[1]] = c
        counts[1] += 1
    elif not ok_rem and in_rem:
        p = rem_pos[c]
        last = rem_list[counts[1] - 1]
        rem_list[p] = last
        rem_pos[last] = p
        rem_pos[c] = -1
        counts[1] -= 1


@njit(cache=True, nogil=True)
def mcmc_init_sets(H, add_list, add_pos, rem_list, rem_pos, counts):
    L = H.shape[0]
    counts[0] = 0
    counts[1] = 0
    for c in range(L * L):
        add_pos[c] = -1
        rem_pos[c] = -1
    for i in range(L):
        for j in range(L):
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j)


@njit(cache=True, nogil=True)
def mcmc_steps(H, add_list, add_pos, rem_list, rem_pos, counts, q, u, vol):
    """Run one Metropolis step per uniform pair in u.

    Proposal: uniform over addable plus removable cube positions; the
    acceptance ratio carries the move-count ratio to preserve detailed
    balance.  Returns 1 if an accepted add touches the lattice boundary
    (state space truncation would bias the chain from then on).
    """
    L = H.shape[0]
    nsteps = u.size // 2
    for s in range(nsteps):
        total = counts[0] + counts[1]
        r = int(u[2 * s] * total)
        if r >= total:
            r = total - 1
        if r < counts[0]:
            c = add_list[r]
            delta = 1
            qfac = q
        else:
            c = rem_list[r - counts[0]]
            delta = -1
            qfac = 1.0 / q
        i = c // L
        j = c % L
        if delta == 1 and (i == L - 1 or j == L - 1):
            return 1

        H[i, j] += delta
        _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j)
        if i > 0:
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i - 1, j)
        if i + 1 < L:
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i + 1, j)
        if j > 0:
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j - 1)
        if j + 1 < L:
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j + 1)

        new_total = counts[0] + counts[1]
        acc = qfac * total / new_total
        if acc < 1.0 and u[2 * s + 1] >= acc:
            H[i, j] -= delta
            _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j)
            if i > 0:
                _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i - 1, j)
            if i + 1 < L:
                _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i + 1, j)
            if j > 0:
                _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j - 1)
            if j + 1 < L:
                _refresh_cell(H, add_list, add_pos, rem_list, rem_pos, counts, i, j + 1)
        else:
            vol[0] += delta
    return 0
