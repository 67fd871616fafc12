"""Integer max-flow and feasible circulations with arc lower bounds.

Small deterministic Dinic implementation: adjacency is scanned in insertion
order, so identical inputs yield identical flows.  Instances here are tiny
(a few thousand arcs), built fresh per use.
"""

from __future__ import annotations


class FlowNet:
    def __init__(self):
        self.n = 0
        self.head: list[list[int]] = []
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_node(self) -> int:
        self.head.append([])
        self.n += 1
        return self.n - 1

    def add_arc(self, u: int, v: int, cap: int) -> int:
        aid = len(self.to)
        self.to.append(v)
        self.cap.append(cap)
        self.head[u].append(aid)
        self.to.append(u)
        self.cap.append(0)
        self.head[v].append(aid + 1)
        return aid

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        INF = 1 << 62
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for aid in self.head[u]:
                    v = self.to[aid]
                    if self.cap[aid] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return total
            it = [0] * self.n

            def augment(u: int, f: int) -> int:
                if u == t:
                    return f
                while it[u] < len(self.head[u]):
                    aid = self.head[u][it[u]]
                    v = self.to[aid]
                    if self.cap[aid] > 0 and level[v] == level[u] + 1:
                        d = augment(v, min(f, self.cap[aid]))
                        if d > 0:
                            self.cap[aid] -= d
                            self.cap[aid ^ 1] += d
                            return d
                    it[u] += 1
                return 0

            while True:
                pushed = augment(s, INF)
                if pushed == 0:
                    break
                total += pushed


def feasible_circulation(n_nodes: int, arcs: list[tuple[int, int, int, int]]):
    """Find integral arc flows for a circulation with bounds.

    arcs is a list of (u, v, low, cap).  Returns the list of flows in arc
    order, or None when no feasible circulation exists.
    """
    net = FlowNet()
    for _ in range(n_nodes):
        net.add_node()
    ss = net.add_node()
    tt = net.add_node()
    excess = [0] * n_nodes
    ids = []
    for (u, v, low, cap) in arcs:
        if low > cap:
            return None
        ids.append(net.add_arc(u, v, cap - low))
        excess[v] += low
        excess[u] -= low
    need = 0
    for v in range(n_nodes):
        if excess[v] > 0:
            net.add_arc(ss, v, excess[v])
            need += excess[v]
        elif excess[v] < 0:
            net.add_arc(v, tt, -excess[v])
    if net.max_flow(ss, tt) != need:
        return None
    return [arcs[i][2] + net.cap[ids[i] ^ 1] for i in range(len(arcs))]
