"""Exact integer max-flow (Dinic) with residual reachability."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network with integer capacities stored as paired arcs.

    Arc ``a`` and its reverse ``a ^ 1`` are created together by
    :meth:`add_arc`. Capacities can be changed between runs with
    :meth:`set_capacity`; :meth:`reset` restores every arc to its configured
    capacity and clears the flow.
    """

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.head: list[int] = []
        self.base: list[int] = []
        self.cap: list[int] = []

    def add_node(self) -> int:
        self.adj.append([])
        self.num_nodes += 1
        return self.num_nodes - 1

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("capacity must be nonnegative")
        a = len(self.head)
        self.head += (v, u)
        self.base += (capacity, 0)
        self.cap += (capacity, 0)
        self.adj[u].append(a)
        self.adj[v].append(a + 1)
        return a

    def set_capacity(self, arc: int, capacity: int):
        self.base[arc] = capacity
        self.cap[arc] = capacity

    def reset(self):
        self.cap[:] = self.base

    def flow_on(self, arc: int) -> int:
        return self.base[arc] - self.cap[arc]

    def _levels(self, s: int, t: int):
        level = [-1] * self.num_nodes
        level[s] = 0
        q = deque([s])
        head, cap, adj = self.head, self.cap, self.adj
        while q:
            u = q.popleft()
            for a in adj[u]:
                v = head[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def _augment(self, s: int, t: int, level: list[int]) -> int:
        head, cap, adj = self.head, self.cap, self.adj
        it = [0] * self.num_nodes
        total = 0
        while True:
            # iterative DFS along the level graph
            path: list[int] = []
            u = s
            while u != t:
                arcs = adj[u]
                i = it[u]
                while i < len(arcs):
                    a = arcs[i]
                    v = head[a]
                    if cap[a] > 0 and level[v] == level[u] + 1:
                        break
                    i += 1
                it[u] = i
                if i == len(arcs):
                    if not path:
                        return total
                    level[u] = -1
                    a = path.pop()
                    u = head[a ^ 1]
                    it[u] += 1
                    continue
                path.append(arcs[i])
                u = head[arcs[i]]
            push = min(cap[a] for a in path)
            for a in path:
                cap[a] -= push
                cap[a ^ 1] += push
            total += push

    def max_flow(self, s: int, t: int) -> tuple[int, set[int]]:
        """Run Dinic from ``s`` to ``t`` on the current residual capacities.

        Returns the flow value added by this call and the set of nodes
        reachable from ``s`` in the final residual network.
        """
        if s == t:
            raise ValueError("source and sink must differ")
        value = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                break
            value += self._augment(s, t, level)
        return value, self.reachable(s)

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        head, cap, adj = self.head, self.cap, self.adj
        while stack:
            u = stack.pop()
            for a in adj[u]:
                v = head[a]
                if cap[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def max_flow(net: FlowNetwork, s: int, t: int) -> tuple[int, set[int]]:
    return net.max_flow(s, t)
