"""Pure-Python terminal-cut kernel; fallback for the compiled ``_sweep_c``.

Both kernels expose the same class, ``TerminalKernel(n, edges, weights)``,
with ``min_cut(S_mask, T_mask)`` and ``sweep(max_s, max_t, threads)``.

Sweep layout. Terminal sets are visited in ascending bitmask order, which is a
preorder walk of the tree whose parent of ``S`` is ``S`` minus its smallest
vertex, and which lists every subset of ``S`` before ``S``. Two exact facts are
used to avoid max-flow calls:

* the source-minimal minimum ``(S, T)`` cut ``U`` is also the answer for
  ``(S + x, T)`` when ``x`` is in ``U`` and for ``(S, T + y)`` when ``y`` is not;
* a maximum flow for ``(S', T')`` with ``S'`` a subset of ``S`` and ``T'`` a
  subset of ``T`` is a feasible flow for ``(S, T)``. Each new flow continues
  from the largest stored flow among ``(S - x, T)`` in the current column and
  ``(S, T - min T)`` in the parent column (one column is kept per ``|T|``).
"""

from __future__ import annotations

from itertools import combinations

from .flow import FlowNetwork


def subset_table(n: int, r: int):
    """Nonempty subsets of ``range(n)`` with size <= r in ascending mask order.

    Returns ``(masks, sizes, subs, width)``. ``subs`` is flat with ``width``
    slots per subset: slot ``q`` of subset ``i`` holds ``(index, bit)`` for the
    subset with its ``q``-th smallest vertex removed, or ``(-1, 0)`` when that
    would be empty or past the subset size.
    """
    r = min(r, n)
    masks = sorted(
        sum(1 << v for v in combo)
        for size in range(1, r + 1)
        for combo in combinations(range(n), size)
    )
    index = {m: i for i, m in enumerate(masks)}
    sizes = [m.bit_count() for m in masks]
    width = max(r, 1)
    subs: list[tuple[int, int]] = []
    for m, size in zip(masks, sizes):
        row = []
        if size > 1:
            b = m
            while b:
                low = b & -b
                b ^= low
                row.append((index[m ^ low], low))
        row += [(-1, 0)] * (width - len(row))
        subs += row
    return masks, sizes, subs, width


class TerminalKernel:
    backend = "python"

    def __init__(self, n: int, edges, weights):
        self.n = n
        self.m = len(edges)
        self.inf = 1 + sum(weights)
        net = FlowNetwork(n + 2 * self.m + 2)
        self.src = n + 2 * self.m
        self.snk = self.src + 1
        for j, (verts, w) in enumerate(zip(edges, weights)):
            e_in, e_out = n + 2 * j, n + 2 * j + 1
            net.add_arc(e_in, e_out, w)
            for v in verts:
                net.add_arc(v, e_in, self.inf)
                net.add_arc(e_out, v, self.inf)
        self.src_arc = [net.add_arc(self.src, v, 0) for v in range(n)]
        self.snk_arc = [net.add_arc(v, self.snk, 0) for v in range(n)]
        self.net = net

    def _continue(self, cap: list[int]) -> tuple[int, int]:
        """Augment ``cap`` (a residual vector) to optimality; returns (added, mask)."""
        net = self.net
        net.cap = cap
        added, reach = net.max_flow(self.src, self.snk)
        u = 0
        for v in reach:
            if v < self.n:
                u |= 1 << v
        return added, u

    def min_cut(self, s_mask: int, t_mask: int) -> tuple[int, int]:
        """Value and source-side mask of the source-minimal min terminal cut."""
        cap = list(self.net.base)
        for v in range(self.n):
            if s_mask >> v & 1:
                cap[self.src_arc[v]] = self.inf
            if t_mask >> v & 1:
                cap[self.snk_arc[v]] = self.inf
        return self._continue(cap)

    def sweep(self, max_s: int, max_t: int, threads: int = 1):
        """Source sides over all ordered disjoint pairs with |S|<=max_s, |T|<=max_t.

        ``threads`` is accepted for interface parity and ignored. Returns
        ``(sorted distinct masks, stats)``.
        """
        s_masks, _, s_subs, s_w = subset_table(self.n, max_s)
        t_masks, t_sizes, t_subs, t_w = subset_table(self.n, max_t)
        ns, nt = len(s_masks), len(t_masks)
        table = [0] * (ns * nt)
        pairs = flows = 0
        # cols[d][i] = (residual, value, opened S, opened T) for the most
        # recent column of T-size d, or None
        cols: list[list | None] = [None] * (max(t_sizes) + 1)
        for j, tm in enumerate(t_masks):
            d = t_sizes[j]
            col = cols[d] = [None] * ns
            up = cols[d - 1] if d > 1 else None
            t_row = t_subs[j * t_w:(j + 1) * t_w] if d > 1 else ()
            for i, sm in enumerate(s_masks):
                if sm & tm:
                    continue
                pairs += 1
                hit = False
                warm = None
                for p, bit in s_subs[i * s_w:(i + 1) * s_w]:
                    if p < 0:
                        break
                    if col[p] is not None and (warm is None or col[p][1] > warm[1]):
                        warm = col[p]
                    u = table[p * nt + j]
                    if u & bit:
                        hit = True
                        break
                if up is not None and up[i] is not None and (warm is None or up[i][1] > warm[1]):
                    warm = up[i]
                if not hit:
                    for p, bit in t_row:
                        if p < 0:
                            break
                        u = table[i * nt + p]
                        if not u & bit:
                            hit = True
                            break
                if hit:
                    table[i * nt + j] = u
                    col[i] = warm
                    continue
                if warm is None:
                    cap, top, so, to = list(self.net.base), 0, 0, 0
                else:
                    cap, top, so, to = list(warm[0]), warm[1], warm[2], warm[3]
                for v in range(self.n):
                    if (sm & ~so) >> v & 1:
                        cap[self.src_arc[v]] = self.inf
                    if (tm & ~to) >> v & 1:
                        cap[self.snk_arc[v]] = self.inf
                added, u = self._continue(cap)
                flows += 1
                table[i * nt + j] = u
                col[i] = (cap, top + added, sm, tm)
        found = sorted(set(table) - {0})
        return found, {"pairs": pairs, "flow_calls": flows}
