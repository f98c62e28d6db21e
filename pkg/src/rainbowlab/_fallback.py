"""Pure-Python search kernels.

Same algorithms, visiting order and node accounting as the compiled
``_core`` module, so both backends return identical results (including
``nodes``) on every input.  Graphs are passed as ``(n, ncolors, cmat)`` where
``cmat`` is the flat color matrix with -1 for non-edges.
"""

import time

CHECK_INTERVAL = 1 << 14


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, n, cmat, max_nodes, max_secs):
        self.nbrs = [[(w, cmat[v * n + w]) for w in range(n) if cmat[v * n + w] >= 0] for v in range(n)]
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = time.perf_counter() + max_secs if max_secs > 0 else 0.0
        self.exhausted = False

    def tick(self):
        if self.nodes == self.max_nodes:
            self.exhausted = True
            raise _Stop
        self.nodes += 1
        if self.deadline and self.nodes % CHECK_INTERVAL == 0 and time.perf_counter() > self.deadline:
            self.exhausted = True
            raise _Stop


def longest_path(n, ncolors, cmat, max_nodes=-1, max_secs=0.0):
    """Longest rainbow path, lexicographically first with start <= end.

    Returns ``(length, vertices, nodes, complete)``.
    """
    if n == 0:
        return 0, [], 0, True
    s = _Search(n, cmat, max_nodes, max_secs)
    nbrs = s.nbrs
    cap = min(n - 1, ncolors)
    best = [-1, []]
    path = []

    def dfs(v, vmask, cmask, length):
        s.tick()
        if length > best[0] and (length == 0 or path[0] < v):
            best[0] = length
            best[1] = path[:]
            if length == cap:
                raise _Stop
        if length + min(n - 1 - length, ncolors - length) <= best[0]:
            return
        for w, c in nbrs[v]:
            if not (vmask >> w & 1) and not (cmask >> c & 1):
                path.append(w)
                dfs(w, vmask | 1 << w, cmask | 1 << c, length + 1)
                path.pop()

    try:
        for root in range(n):
            path.append(root)
            dfs(root, 1 << root, 0, 0)
            path.pop()
    except _Stop:
        pass
    return best[0], best[1], s.nodes, not s.exhausted


def rainbow_cycle(n, ncolors, cmat, target=0, max_nodes=-1, max_secs=0.0):
    """Rainbow cycle search in canonical (anchor = minimum vertex) form.

    ``target == 0`` maximizes the length; ``target == k`` stops at the first
    cycle of length >= k.  Returns ``(length, vertices, nodes, complete)`` with
    length 0 when no qualifying cycle exists.
    """
    if n < 3 or ncolors < 3:
        return 0, [], 0, True
    s = _Search(n, cmat, max_nodes, max_secs)
    nbrs = s.nbrs
    cap = min(n, ncolors)
    # best[0] is the pruning threshold: a cycle must exceed it to be recorded
    best = [max(target - 1, 2), []]
    path = []

    def dfs(v, vmask, cmask, m, anchor, free):
        s.tick()
        if m >= 2:
            c = cmat[v * n + anchor]
            if c >= 0 and not (cmask >> c & 1) and path[1] < v and m + 1 > best[0]:
                best[0] = m + 1
                best[1] = path[:]
                if target or m + 1 == cap:
                    raise _Stop
        if min(m + 1 + free, cap) <= best[0]:
            return
        for w, c in nbrs[v]:
            if w > anchor and not (vmask >> w & 1) and not (cmask >> c & 1):
                path.append(w)
                dfs(w, vmask | 1 << w, cmask | 1 << c, m + 1, anchor, free - 1)
                path.pop()

    try:
        for anchor in range(n - 2):
            if n - anchor <= best[0]:
                break
            path.append(anchor)
            dfs(anchor, 1 << anchor, 0, 0, anchor, n - anchor - 1)
            path.pop()
    except _Stop:
        pass
    length = len(best[1])
    return length, best[1], s.nodes, not s.exhausted


def find_rainbow_c4(n, cmat):
    """First rainbow 4-cycle (a, b, c, d) with a minimal and b < d, or None."""
    nb = [[w for w in range(n) if cmat[v * n + w] >= 0] for v in range(n)]
    for a in range(n):
        row_a = a * n
        for c in range(a + 1, n):
            row_c = c * n
            common = [w for w in nb[a] if w > a and w != c and cmat[row_c + w] >= 0]
            for i in range(len(common)):
                b = common[i]
                ab, bc = cmat[row_a + b], cmat[row_c + b]
                if ab == bc:
                    continue
                for j in range(i + 1, len(common)):
                    d = common[j]
                    cd, da = cmat[row_c + d], cmat[row_a + d]
                    if cd != ab and cd != bc and da != ab and da != bc and cd != da:
                        return [a, b, c, d]
    return None
