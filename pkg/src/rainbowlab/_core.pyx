# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (n <= 64).

Mirrors ``_fallback`` exactly: same visiting order, pruning and node
accounting.  Vertex sets are uint64 masks; color usage is a byte array since
color ids range up to |E|.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
import time

cdef enum:
    CHECK_INTERVAL = 16384
MAX_N = 64

cdef struct State:
    int n
    int ncolors
    int *cmat
    int *nbr          # n*n neighbor ids, row v holds deg[v] entries
    int *nbrc         # matching colors
    int *deg
    unsigned char *used
    int *path
    int plen
    int *best
    int best_len      # path: best length; cycle: threshold to exceed
    int best_plen
    long long nodes
    long long max_nodes
    double deadline
    int exhausted
    int cap
    int target
    int anchor


cdef object _perf = time.perf_counter


cdef int _tick(State *s) except -1:
    if s.nodes == s.max_nodes:
        s.exhausted = 1
        return 1
    s.nodes += 1
    if s.deadline > 0 and s.nodes % CHECK_INTERVAL == 0:
        if _perf() > s.deadline:
            s.exhausted = 1
            return 1
    return 0


cdef int _setup(State *s, int n, int ncolors, int[:] cmat, long long max_nodes, double max_secs) except -1:
    cdef int v, w, c, k
    s.n = n
    s.ncolors = ncolors
    s.nodes = 0
    s.max_nodes = max_nodes
    s.deadline = _perf() + max_secs if max_secs > 0 else 0.0
    s.exhausted = 0
    s.plen = 0
    s.best_plen = 0
    s.cmat = <int *> malloc(n * n * sizeof(int))
    s.nbr = <int *> malloc(n * n * sizeof(int))
    s.nbrc = <int *> malloc(n * n * sizeof(int))
    s.deg = <int *> calloc(n, sizeof(int))
    s.used = <unsigned char *> calloc(ncolors + 1, 1)
    s.path = <int *> malloc((n + 1) * sizeof(int))
    s.best = <int *> malloc((n + 1) * sizeof(int))
    if not (s.cmat and s.nbr and s.nbrc and s.deg and s.used and s.path and s.best):
        _teardown(s)
        raise MemoryError()
    for v in range(n * n):
        s.cmat[v] = cmat[v]
    for v in range(n):
        k = 0
        for w in range(n):
            c = cmat[v * n + w]
            if c >= 0:
                s.nbr[v * n + k] = w
                s.nbrc[v * n + k] = c
                k += 1
        s.deg[v] = k
    return 0


cdef void _teardown(State *s):
    free(s.cmat)
    free(s.nbr)
    free(s.nbrc)
    free(s.deg)
    free(s.used)
    free(s.path)
    free(s.best)


cdef inline void _record(State *s):
    cdef int i
    for i in range(s.plen):
        s.best[i] = s.path[i]
    s.best_plen = s.plen


cdef int _path_dfs(State *s, int v, uint64_t vmask, int length) except -1:
    cdef int i, w, c, row, lim
    if _tick(s):
        return 1
    if length > s.best_len and (length == 0 or s.path[0] < v):
        s.best_len = length
        _record(s)
        if length == s.cap:
            return 1
    lim = s.n - 1 - length
    if s.ncolors - length < lim:
        lim = s.ncolors - length
    if length + lim <= s.best_len:
        return 0
    row = v * s.n
    for i in range(s.deg[v]):
        w = s.nbr[row + i]
        c = s.nbrc[row + i]
        if (vmask >> w) & 1 or s.used[c]:
            continue
        s.used[c] = 1
        s.path[s.plen] = w
        s.plen += 1
        if _path_dfs(s, w, vmask | ((<uint64_t> 1) << w), length + 1):
            return 1
        s.plen -= 1
        s.used[c] = 0
    return 0


def longest_path(int n, int ncolors, int[:] cmat, long long max_nodes=-1, double max_secs=0.0):
    cdef State s
    cdef int root
    if n == 0:
        return 0, [], 0, True
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 64")
    _setup(&s, n, ncolors, cmat, max_nodes, max_secs)
    try:
        s.cap = min(n - 1, ncolors)
        s.best_len = -1
        for root in range(n):
            s.plen = 1
            s.path[0] = root
            if _path_dfs(&s, root, (<uint64_t> 1) << root, 0):
                break
        return s.best_len, [s.best[i] for i in range(s.best_plen)], s.nodes, not s.exhausted
    finally:
        _teardown(&s)


cdef int _cycle_dfs(State *s, int v, uint64_t vmask, int m, int avail) except -1:
    cdef int i, w, c, row, ub
    if _tick(s):
        return 1
    if m >= 2:
        c = s.cmat[v * s.n + s.anchor]
        if c >= 0 and not s.used[c] and s.path[1] < v and m + 1 > s.best_len:
            s.best_len = m + 1
            _record(s)
            if s.target or m + 1 == s.cap:
                return 1
    ub = m + 1 + avail
    if s.cap < ub:
        ub = s.cap
    if ub <= s.best_len:
        return 0
    row = v * s.n
    for i in range(s.deg[v]):
        w = s.nbr[row + i]
        c = s.nbrc[row + i]
        if w <= s.anchor or (vmask >> w) & 1 or s.used[c]:
            continue
        s.used[c] = 1
        s.path[s.plen] = w
        s.plen += 1
        if _cycle_dfs(s, w, vmask | ((<uint64_t> 1) << w), m + 1, avail - 1):
            return 1
        s.plen -= 1
        s.used[c] = 0
    return 0


def rainbow_cycle(int n, int ncolors, int[:] cmat, int target=0, long long max_nodes=-1, double max_secs=0.0):
    cdef State s
    cdef int anchor
    if n < 3 or ncolors < 3:
        return 0, [], 0, True
    if n > MAX_N:
        raise ValueError("compiled kernel supports n <= 64")
    _setup(&s, n, ncolors, cmat, max_nodes, max_secs)
    try:
        s.cap = min(n, ncolors)
        s.target = target
        s.best_len = max(target - 1, 2)
        for anchor in range(n - 2):
            if n - anchor <= s.best_len:
                break
            s.anchor = anchor
            s.plen = 1
            s.path[0] = anchor
            if _cycle_dfs(&s, anchor, (<uint64_t> 1) << anchor, 0, n - anchor - 1):
                break
        return s.best_plen, [s.best[i] for i in range(s.best_plen)], s.nodes, not s.exhausted
    finally:
        _teardown(&s)


def find_rainbow_c4(int n, int[:] cmat):
    cdef int a, b, c, d, i, j, nc, ab, bc, cd, da
    cdef int *common
    if n < 4:
        return None
    common = <int *> malloc(n * sizeof(int))
    if not common:
        raise MemoryError()
    try:
        for a in range(n):
            for c in range(a + 1, n):
                nc = 0
                for b in range(a + 1, n):
                    if b != c and cmat[a * n + b] >= 0 and cmat[c * n + b] >= 0:
                        common[nc] = b
                        nc += 1
                for i in range(nc):
                    b = common[i]
                    ab = cmat[a * n + b]
                    bc = cmat[c * n + b]
                    if ab == bc:
                        continue
                    for j in range(i + 1, nc):
                        d = common[j]
                        cd = cmat[c * n + d]
                        da = cmat[a * n + d]
                        if cd != ab and cd != bc and da != ab and da != bc and cd != da:
                            return [a, b, c, d]
        return None
    finally:
        free(common)
