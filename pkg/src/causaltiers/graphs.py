"""Mixed graphs with directed and undirected edges (PDAGs).

A :class:`PDAG` holds at most one edge per node pair, forbids self-loops
and directed cycles, and is immutable after construction.  DAGs, CPDAGs
and maximally oriented PDAGs are all validity states of this one
structure.  Nodes carry arbitrary hashable labels; internally they are
mapped to dense indices in insertion order, and every set-valued result
is returned sorted by that index so outputs are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

Node = Hashable
Edge = tuple[Node, Node]

#: Node-count guard for exhaustive path enumeration.
DEFAULT_PATH_NODE_LIMIT = 25


class GraphError(ValueError):
    """Structural problem with a graph or a graph operation's input."""


class CycleError(GraphError):
    """A set of directed edges closes a directed cycle."""


class LimitError(GraphError):
    """An enumeration guard (node or edge count) was exceeded."""


class PDAG:
    """Partially directed acyclic graph.

    Parameters
    ----------
    nodes:
        Iterable of node labels.  Labels must be unique; endpoints of
        edges that are not listed are appended in order of appearance.
    directed:
        Iterable of ``(tail, head)`` pairs.
    undirected:
        Iterable of unordered ``(u, v)`` pairs.

    Raises
    ------
    GraphError
        On self-loops, duplicate edges between a pair, or unknown input.
    CycleError
        If the directed edges contain a cycle.

    Examples
    --------
    >>> g = PDAG("ABC", directed=[("A", "B")], undirected=[("B", "C")])
    >>> g.parents_of("B")
    ('A',)
    >>> g.neighbors_of("B")
    ('C',)
    """

    __slots__ = ("_names", "_index", "_amat", "_hash")

    def __init__(
        self,
        nodes: Iterable[Node] = (),
        directed: Iterable[Edge] = (),
        undirected: Iterable[Edge] = (),
    ):
        names: list[Node] = []
        index: dict[Node, int] = {}

        def intern(label: Node) -> int:
            if label not in index:
                index[label] = len(names)
                names.append(label)
            return index[label]

        for label in nodes:
            if label in index:
                raise GraphError(f"duplicate node label {label!r}")
            intern(label)

        directed = [(u, v) for u, v in directed]
        undirected = [(u, v) for u, v in undirected]
        for u, v in directed + undirected:
            intern(u)
            intern(v)

        p = len(names)
        amat = np.zeros((p, p), dtype=bool)
        for u, v in directed:
            i, j = index[u], index[v]
            self._check_new_pair(amat, i, j, u, v)
            amat[i, j] = True
        for u, v in undirected:
            i, j = index[u], index[v]
            self._check_new_pair(amat, i, j, u, v)
            amat[i, j] = amat[j, i] = True

        cycle = _directed_cycle(amat)
        if cycle is not None:
            raise CycleError(
                "directed cycle: " + " -> ".join(str(names[i]) for i in cycle)
            )

        self._names = tuple(names)
        self._index = index
        self._amat = amat
        self._amat.setflags(write=False)
        self._hash: int | None = None

    @staticmethod
    def _check_new_pair(amat, i: int, j: int, u: Node, v: Node) -> None:
        if i == j:
            raise GraphError(f"self-loop at node {u!r}")
        if amat[i, j] or amat[j, i]:
            raise GraphError(f"more than one edge between {u!r} and {v!r}")

    @classmethod
    def _from_amat(cls, names: Sequence[Node], amat: np.ndarray) -> "PDAG":
        """Build from an adjacency matrix without copying edge lists."""
        g = cls.__new__(cls)
        g._names = tuple(names)
        g._index = {label: i for i, label in enumerate(names)}
        cycle = _directed_cycle(amat)
        if cycle is not None:
            raise CycleError(
                "directed cycle: " + " -> ".join(str(names[i]) for i in cycle)
            )
        g._amat = amat.copy()
        g._amat.setflags(write=False)
        g._hash = None
        return g

    # === basic accessors

    @property
    def nodes(self) -> tuple[Node, ...]:
        return self._names

    @property
    def num_nodes(self) -> int:
        return len(self._names)

    def has_node(self, v: Node) -> bool:
        return v in self._index

    def index_of(self, v: Node) -> int:
        """Dense index of ``v`` (insertion order)."""
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown node {v!r}") from None

    @property
    def directed_edges(self) -> tuple[Edge, ...]:
        a = self._amat
        out = []
        for i, j in zip(*np.nonzero(a & ~a.T)):
            out.append((self._names[i], self._names[j]))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return tuple(out)

    @property
    def undirected_edges(self) -> tuple[Edge, ...]:
        a = self._amat
        out = []
        for i, j in zip(*np.nonzero(a & a.T)):
            if i < j:
                out.append((self._names[i], self._names[j]))
        return tuple(out)

    @property
    def num_edges(self) -> int:
        return len(self.directed_edges) + len(self.undirected_edges)

    @property
    def is_directed(self) -> bool:
        """True iff every edge is directed (the graph is a DAG)."""
        return not self.undirected_edges

    @property
    def is_undirected(self) -> bool:
        return not self.directed_edges

    def has_edge(self, u: Node, v: Node) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return bool(self._amat[i, j] or self._amat[j, i])

    def has_directed(self, u: Node, v: Node) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return bool(self._amat[i, j] and not self._amat[j, i])

    def has_undirected(self, u: Node, v: Node) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return bool(self._amat[i, j] and self._amat[j, i])

    def _labels(self, idxs: Iterable[int]) -> tuple[Node, ...]:
        return tuple(self._names[i] for i in sorted(idxs))

    def parents_of(self, v: Node) -> tuple[Node, ...]:
        j = self.index_of(v)
        a = self._amat
        return self._labels(np.nonzero(a[:, j] & ~a[j, :])[0])

    def children_of(self, v: Node) -> tuple[Node, ...]:
        i = self.index_of(v)
        a = self._amat
        return self._labels(np.nonzero(a[i, :] & ~a[:, i])[0])

    def neighbors_of(self, v: Node) -> tuple[Node, ...]:
        """Nodes joined to ``v`` by an undirected edge."""
        i = self.index_of(v)
        a = self._amat
        return self._labels(np.nonzero(a[i, :] & a[:, i])[0])

    def adjacent_to(self, v: Node) -> tuple[Node, ...]:
        i = self.index_of(v)
        a = self._amat
        return self._labels(np.nonzero(a[i, :] | a[:, i])[0])

    # === comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, PDAG):
            return NotImplemented
        return (
            set(self._names) == set(other._names)
            and set(self.directed_edges) == set(other.directed_edges)
            and set(self.undirected_edges) == set(other.undirected_edges)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (
                    frozenset(self._names),
                    frozenset(self.directed_edges),
                    frozenset(self.undirected_edges),
                )
            )
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{u}->{v}" for u, v in self.directed_edges]
        parts += [f"{u}--{v}" for u, v in self.undirected_edges]
        return f"PDAG({list(self._names)!r}, [{', '.join(parts)}])"

    # === derived graphs

    def skeleton(self) -> "PDAG":
        """Same adjacencies with every edge undirected."""
        a = self._amat
        return PDAG._from_amat(self._names, a | a.T)

    def undirected_subgraph(self) -> "PDAG":
        """Same nodes, only the undirected edges."""
        a = self._amat
        return PDAG._from_amat(self._names, a & a.T)

    def directed_subgraph(self) -> "PDAG":
        """Same nodes, only the directed edges."""
        a = self._amat
        return PDAG._from_amat(self._names, a & ~a.T)

    def induced_subgraph(self, nodes: Iterable[Node]) -> "PDAG":
        """Subgraph over ``nodes`` keeping all and only edges between them."""
        keep = [self.index_of(v) for v in nodes]
        if len(set(keep)) != len(keep):
            raise GraphError("duplicate node in induced subgraph selection")
        keep.sort()
        sub = self._amat[np.ix_(keep, keep)]
        return PDAG._from_amat([self._names[i] for i in keep], sub)

    # === structure queries

    def has_directed_cycle(self) -> bool:
        return _directed_cycle(self._amat) is not None

    def has_partially_directed_cycle(self) -> bool:
        """True iff some cycle traverses >= 1 directed edge, none backwards.

        Undirected edges may be walked in either direction.  Detection:
        a directed edge a -> b closes such a cycle iff a is reachable
        from b along directed-forward or undirected edges.
        """
        a = self._amat
        d = a & ~a.T
        semi = a  # rows already encode "can leave i towards j"
        for i, j in zip(*np.nonzero(d)):
            if _reaches(semi, int(j), int(i)):
                return True
        return False

    def chain_components(self) -> list[tuple[Node, ...]]:
        """Connected components of the undirected subgraph, singletons included.

        Components are sorted by their smallest node index.
        """
        a = self._amat
        und = a & a.T
        seen = [False] * self.num_nodes
        comps = []
        for start in range(self.num_nodes):
            if seen[start]:
                continue
            comp = []
            queue = deque([start])
            seen[start] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in np.nonzero(und[v])[0]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(int(w))
            comps.append(self._labels(comp))
        return comps

    def is_chordal(self) -> bool:
        """Chordality of an undirected graph.

        Runs maximum cardinality search and verifies that the resulting
        ordering is a perfect elimination ordering.  Works per connected
        component, so a disconnected graph is chordal iff every component
        is.

        Raises
        ------
        GraphError
            If the graph has a directed edge.
        """
        if not self.is_undirected:
            raise GraphError("chordality is defined for undirected graphs")
        p = self.num_nodes
        a = self._amat
        adj = [set(np.nonzero(a[i])[0]) for i in range(p)]

        weight = [0] * p
        number = [0] * p
        unnumbered = set(range(p))
        for num in range(p, 0, -1):
            z = max(unnumbered, key=lambda v: (weight[v], -v))
            unnumbered.discard(z)
            number[z] = num
            for y in adj[z]:
                if y in unnumbered:
                    weight[y] += 1

        for v in range(p):
            later = {w for w in adj[v] if number[w] > number[v]}
            if not later:
                continue
            u = min(later, key=lambda w: number[w])
            if not (later - {u}) <= adj[u]:
                return False
        return True

    # === path enumeration

    def find_unshielded_paths(
        self, source: Node, target: Node, max_nodes: int = DEFAULT_PATH_NODE_LIMIT
    ) -> list[tuple[Node, ...]]:
        """All simple paths from ``source`` to ``target`` whose every
        consecutive triple <A, B, C> has A and C non-adjacent.

        Paths are returned in depth-first order with neighbours visited
        by node index, so the result is deterministic.
        """
        s, t = self.index_of(source), self.index_of(target)
        if s == t:
            raise GraphError("source and target must differ")
        self._check_path_guard(max_nodes)
        a = self._amat
        adj_bool = a | a.T
        adj = [list(np.nonzero(adj_bool[i])[0]) for i in range(self.num_nodes)]

        out: list[tuple[Node, ...]] = []
        path = [s]
        on_path = {s}

        def extend():
            v = path[-1]
            for w in adj[v]:
                if w in on_path:
                    continue
                if len(path) >= 2 and adj_bool[path[-2], w]:
                    continue  # triple would be shielded
                path.append(w)
                on_path.add(w)
                if w == t:
                    out.append(tuple(self._names[i] for i in path))
                else:
                    extend()
                path.pop()
                on_path.discard(w)

        extend()
        return out

    def simple_paths(
        self,
        source: Node,
        target: Node,
        max_edges: int | None = None,
        max_nodes: int = DEFAULT_PATH_NODE_LIMIT,
    ) -> Iterator[tuple[Node, ...]]:
        """Yield all simple paths from ``source`` to ``target``.

        ``max_edges`` bounds the path length; the node-count guard
        protects against exponential blowup on large graphs.
        """
        s, t = self.index_of(source), self.index_of(target)
        if s == t:
            raise GraphError("source and target must differ")
        self._check_path_guard(max_nodes)
        a = self._amat
        adj_bool = a | a.T
        adj = [list(np.nonzero(adj_bool[i])[0]) for i in range(self.num_nodes)]

        path = [s]
        on_path = {s}

        def extend():
            if max_edges is not None and len(path) > max_edges:
                return
            v = path[-1]
            for w in adj[v]:
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                if w == t:
                    yield tuple(self._names[i] for i in path)
                else:
                    yield from extend()
                path.pop()
                on_path.discard(w)

        return extend()

    def _check_path_guard(self, max_nodes: int) -> None:
        if self.num_nodes > max_nodes:
            raise LimitError(
                f"graph has {self.num_nodes} nodes; exhaustive path "
                f"enumeration is limited to {max_nodes} (raise max_nodes "
                "to override)"
            )

    def check_path(self, path: Sequence[Node]) -> None:
        """Validate that ``path`` is a path of this graph.

        A path has >= 2 distinct nodes with consecutive nodes adjacent.
        """
        if len(path) < 2:
            raise GraphError("a path needs at least two nodes")
        if len(set(path)) != len(path):
            raise GraphError("path nodes must be distinct")
        for u, v in zip(path, path[1:]):
            if not self.has_edge(u, v):
                raise GraphError(f"{u!r} and {v!r} are not adjacent")


def v_structures(g: PDAG) -> frozenset[tuple[Node, Node, Node]]:
    """All unshielded colliders of ``g`` as (parent, collider, parent) triples.

    The two parents are ordered by node index, so each v-structure has a
    single canonical form.
    """
    a = g._amat
    d = a & ~a.T
    adj = a | a.T
    out = set()
    for b in range(g.num_nodes):
        parents = np.nonzero(d[:, b])[0]
        for x in range(len(parents)):
            for y in range(x + 1, len(parents)):
                i, j = int(parents[x]), int(parents[y])
                if not adj[i, j]:
                    out.add((g.nodes[i], g.nodes[b], g.nodes[j]))
    return frozenset(out)


def _directed_cycle(amat: np.ndarray) -> list[int] | None:
    """Return node indices of a directed cycle, or None (Kahn's algorithm)."""
    d = amat & ~amat.T
    p = amat.shape[0]
    indeg = d.sum(axis=0).astype(int)
    queue = deque(i for i in range(p) if indeg[i] == 0)
    removed = 0
    alive = np.ones(p, dtype=bool)
    while queue:
        v = queue.popleft()
        alive[v] = False
        removed += 1
        for w in np.nonzero(d[v])[0]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(int(w))
    if removed == p:
        return None
    # walk backwards inside the remaining subgraph to recover one cycle
    start = int(np.nonzero(alive)[0][0])
    seen = {start: 0}
    walk = [start]
    v = start
    while True:
        preds = np.nonzero(d[:, v] & alive)[0]
        v = int(preds[0])
        if v in seen:
            return [v] + walk[seen[v] :][::-1]
        seen[v] = len(walk)
        walk.append(v)


def _reaches(semi: np.ndarray, start: int, goal: int) -> bool:
    """BFS along rows of ``semi`` (edge i -> j iff semi[i, j])."""
    p = semi.shape[0]
    seen = np.zeros(p, dtype=bool)
    seen[start] = True
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            return True
        nxt = np.nonzero(semi[v] & ~seen)[0]
        seen[nxt] = True
        queue.extend(int(w) for w in nxt)
    return False
