# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled terminal-cut kernel (augmenting paths on the vertex/edge-node network).

Same interface and sweep order as ``hypercut._sweep_py.TerminalKernel``;
limited to n <= 62 because vertex sets are packed into 64-bit masks.
"""

from libc.stdlib cimport calloc, malloc, free
from libc.string cimport memcpy
from libc.stdint cimport int64_t, uint64_t

import numpy as np

from ._sweep_py import subset_table

MAX_N = 62
# bytes of stored residual states per sweep
STATE_BUDGET = 256 << 20


cdef struct Column:
    int64_t *pool
    int64_t **state     # S index -> residual vector or NULL
    int64_t *val        # flow value carried by that vector
    uint64_t *sopen     # terminal arcs already opened in that vector
    uint64_t *topen
    Py_ssize_t used


cdef class TerminalKernel:
    cdef int n, m, num_nodes, num_arcs, src, snk, stamp
    cdef int64_t inf
    cdef int *head      # arc -> target node
    cdef int *first     # node -> first arc index in CSR order
    cdef int *arcs      # CSR list of arc ids
    cdef int64_t *base
    cdef int64_t *cap   # active residual vector
    cdef int *seen
    cdef int *src_arc
    cdef int *snk_arc

    def __cinit__(self, int n, edges, weights):
        if n > MAX_N:
            raise ValueError(f"compiled kernel supports n <= {MAX_N}")
        cdef int m = len(edges), j, v, a, u
        cdef int64_t total = 0
        for w in weights:
            total += w
        self.n = n
        self.m = m
        self.inf = total + 1
        self.num_nodes = n + 2 * m + 2
        self.src = n + 2 * m
        self.snk = self.src + 1
        tails, heads, caps = [], [], []

        def add(int x, int y, int64_t c):
            tails.extend((x, y))
            heads.extend((y, x))
            caps.extend((c, 0))
            return len(heads) - 2

        for j in range(m):
            add(n + 2 * j, n + 2 * j + 1, weights[j])
            for v in edges[j]:
                add(v, n + 2 * j, self.inf)
                add(n + 2 * j + 1, v, self.inf)
        src_arcs = [add(self.src, v, 0) for v in range(n)]
        snk_arcs = [add(v, self.snk, 0) for v in range(n)]

        self.num_arcs = len(heads)
        self.head = <int *> malloc(self.num_arcs * sizeof(int))
        self.base = <int64_t *> malloc(self.num_arcs * sizeof(int64_t))
        self.arcs = <int *> malloc(self.num_arcs * sizeof(int))
        self.first = <int *> malloc((self.num_nodes + 1) * sizeof(int))
        self.seen = <int *> calloc(self.num_nodes, sizeof(int))
        self.src_arc = <int *> malloc(n * sizeof(int))
        self.snk_arc = <int *> malloc(n * sizeof(int))
        self.stamp = 0
        for a in range(self.num_arcs):
            self.head[a] = heads[a]
            self.base[a] = caps[a]
        for u in range(self.num_nodes + 1):
            self.first[u] = 0
        for a in range(self.num_arcs):
            self.first[tails[a] + 1] += 1
        for u in range(self.num_nodes):
            self.first[u + 1] += self.first[u]
        fill = [self.first[u] for u in range(self.num_nodes)]
        for a in range(self.num_arcs):
            self.arcs[fill[tails[a]]] = a
            fill[tails[a]] += 1
        for v in range(n):
            self.src_arc[v] = src_arcs[v]
            self.snk_arc[v] = snk_arcs[v]

    def __dealloc__(self):
        free(self.head)
        free(self.base)
        free(self.arcs)
        free(self.first)
        free(self.seen)
        free(self.src_arc)
        free(self.snk_arc)

    @property
    def backend(self):
        return "cython"

    cdef int64_t _path(self, int u, int64_t limit) noexcept nogil:
        """Push along one residual source-sink path found by DFS; 0 if none."""
        cdef int k, a, v
        cdef int64_t pushed
        if u == self.snk:
            return limit
        self.seen[u] = self.stamp
        for k in range(self.first[u], self.first[u + 1]):
            a = self.arcs[k]
            v = self.head[a]
            if self.cap[a] > 0 and self.seen[v] != self.stamp:
                pushed = self._path(v, limit if limit < self.cap[a] else self.cap[a])
                if pushed > 0:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                    return pushed
        return 0

    cdef uint64_t _augment(self, int64_t *added) noexcept nogil:
        """Augment ``self.cap`` to a maximum flow.

        The search that finally fails marks exactly the nodes reachable from
        the source, whose vertex part is the source-minimal minimum cut.
        """
        cdef int u
        cdef int64_t flow = 0, pushed
        cdef uint64_t out = 0
        while True:
            self.stamp += 1
            pushed = self._path(self.src, self.inf)
            if pushed == 0:
                break
            flow += pushed
        for u in range(self.n):
            if self.seen[u] == self.stamp:
                out |= (<uint64_t> 1) << u
        added[0] = flow
        return out

    cdef void _open(self, uint64_t mask, int *arc) noexcept nogil:
        cdef int v
        for v in range(self.n):
            if (mask >> v) & 1:
                self.cap[arc[v]] = self.inf

    def min_cut(self, s_mask, t_mask):
        """Value and source-side mask of the source-minimal min terminal cut."""
        cdef int64_t value = 0
        cdef uint64_t u, sm = s_mask, tm = t_mask
        cdef int64_t *buf = <int64_t *> malloc(self.num_arcs * sizeof(int64_t))
        with nogil:
            memcpy(buf, self.base, self.num_arcs * sizeof(int64_t))
            self.cap = buf
            self._open(sm, self.src_arc)
            self._open(tm, self.snk_arc)
            u = self._augment(&value)
            self.cap = NULL
        free(buf)
        return int(value), int(u)

    cdef int64_t _sweep(self, Column *cols, Py_ssize_t slots, int64_t *root,
                        const uint64_t[:] s_masks, const int64_t[:] s_sub,
                        const uint64_t[:] s_bit, Py_ssize_t s_w,
                        const uint64_t[:] t_masks, const int64_t[:] t_size,
                        const int64_t[:] t_sub, const uint64_t[:] t_bit,
                        Py_ssize_t t_w, uint64_t[:] table,
                        int64_t *pairs) noexcept nogil:
        cdef Py_ssize_t i, j, q, p, nt = t_masks.shape[0], ns = s_masks.shape[0]
        cdef int d
        cdef uint64_t sm, tm, u = 0, so = 0, to = 0
        cdef int64_t flows = 0, added, top
        cdef int64_t *warm
        cdef bint hit
        cdef Column *col
        cdef Column *up
        for j in range(nt):
            tm = t_masks[j]
            d = <int> t_size[j]
            col = &cols[d]
            up = &cols[d - 1] if d > 1 else NULL
            col.used = 0
            memcpy(root, self.base, self.num_arcs * sizeof(int64_t))
            self.cap = root
            self._open(tm, self.snk_arc)
            for i in range(ns):
                col.state[i] = NULL
                sm = s_masks[i]
                if sm & tm:
                    continue
                pairs[0] += 1
                hit = 0
                warm = NULL
                top = -1
                for q in range(s_w):
                    p = s_sub[i * s_w + q]
                    if p < 0:
                        break
                    if col.state[p] != NULL and col.val[p] > top:
                        top = col.val[p]
                        warm = col.state[p]
                        so = col.sopen[p]
                        to = col.topen[p]
                    u = table[p * nt + j]
                    if u & s_bit[i * s_w + q]:
                        hit = 1
                        break
                if up != NULL and up.state[i] != NULL and up.val[i] > top:
                    top = up.val[i]
                    warm = up.state[i]
                    so = up.sopen[i]
                    to = up.topen[i]
                if not hit and d > 1:
                    for q in range(t_w):
                        p = t_sub[j * t_w + q]
                        if p < 0:
                            break
                        u = table[i * nt + p]
                        if not (u & t_bit[j * t_w + q]):
                            hit = 1
                            break
                if hit:
                    table[i * nt + j] = u
                    if warm != NULL:
                        col.state[i] = warm
                        col.val[i] = top
                        col.sopen[i] = so
                        col.topen[i] = to
                    continue
                if col.used < slots:
                    self.cap = col.pool + col.used * self.num_arcs
                else:
                    self.cap = root + self.num_arcs
                if warm != NULL:
                    memcpy(self.cap, warm, self.num_arcs * sizeof(int64_t))
                else:
                    memcpy(self.cap, root, self.num_arcs * sizeof(int64_t))
                    top = 0
                    so = 0
                    to = tm
                self._open(sm & ~so, self.src_arc)
                self._open(tm & ~to, self.snk_arc)
                u = self._augment(&added)
                flows += 1
                table[i * nt + j] = u
                if col.used < slots:
                    col.state[i] = self.cap
                    col.val[i] = top + added
                    col.sopen[i] = sm
                    col.topen[i] = tm
                    col.used += 1
        self.cap = NULL
        return flows

    def sweep(self, int max_s, int max_t, int threads=1):
        """Source sides over all ordered disjoint pairs with |S|<=max_s, |T|<=max_t.

        Runs sequentially; ``threads`` is accepted for interface parity.
        Returns ``(sorted distinct masks, stats)``.
        """
        s_masks, _, s_subs, sw = subset_table(self.n, max_s)
        t_masks, t_sizes, t_subs, tw = subset_table(self.n, max_t)
        cdef Py_ssize_t ns = len(s_masks), nt = len(t_masks), d
        cdef Py_ssize_t s_w = sw, t_w = tw
        cdef int depth = max(t_sizes)
        cdef Py_ssize_t slots = min(ns, STATE_BUDGET // (8 * self.num_arcs * depth))
        cdef const uint64_t[:] sm = np.array(s_masks, dtype=np.uint64)
        cdef const int64_t[:] sp = np.array([p for p, _ in s_subs], dtype=np.int64)
        cdef const uint64_t[:] sb = np.array([b for _, b in s_subs], dtype=np.uint64)
        cdef const uint64_t[:] tm = np.array(t_masks, dtype=np.uint64)
        cdef const int64_t[:] ts = np.array(t_sizes, dtype=np.int64)
        cdef const int64_t[:] tp = np.array([p for p, _ in t_subs], dtype=np.int64)
        cdef const uint64_t[:] tb = np.array([b for _, b in t_subs], dtype=np.uint64)
        table = np.zeros(ns * nt, dtype=np.uint64)
        cdef uint64_t[:] tab = table
        cdef int64_t pairs = 0, flows
        cdef Column *cols = <Column *> calloc(depth + 1, sizeof(Column))
        cdef int64_t *root = <int64_t *> malloc(2 * self.num_arcs * sizeof(int64_t))
        for d in range(1, depth + 1):
            cols[d].pool = <int64_t *> malloc(max(slots, 1) * self.num_arcs * sizeof(int64_t))
            cols[d].state = <int64_t **> calloc(ns, sizeof(int64_t *))
            cols[d].val = <int64_t *> malloc(ns * sizeof(int64_t))
            cols[d].sopen = <uint64_t *> malloc(ns * sizeof(uint64_t))
            cols[d].topen = <uint64_t *> malloc(ns * sizeof(uint64_t))
        try:
            with nogil:
                flows = self._sweep(cols, slots, root, sm, sp, sb, s_w, tm, ts, tp, tb,
                                    t_w, tab, &pairs)
        finally:
            for d in range(1, depth + 1):
                free(cols[d].pool)
                free(cols[d].state)
                free(cols[d].val)
                free(cols[d].sopen)
                free(cols[d].topen)
            free(cols)
            free(root)
        found = np.unique(table[table != 0])
        return [int(x) for x in found], {"pairs": int(pairs), "flow_calls": int(flows)}
