"""d-separation, Markov equivalence, and oracle CPDAG construction.

d-separation queries are answered with a linear-time reachability walk
over (node, direction) states; the exhaustive path-enumeration
definition is kept as a test oracle for small graphs.  Queries are
restricted to DAGs: the collider semantics of undirected edges is not
defined here, so mixed graphs are rejected rather than guessed at.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

import numpy as np

from .graphs import GraphError, Node, PDAG, v_structures
from .orientation import meek_closure

__all__ = [
    "is_d_separated",
    "v_structures",
    "markov_equivalent",
    "cpdag_of",
]


def _as_index_set(g: PDAG, nodes: Iterable[Node]) -> set[int]:
    return {g.index_of(v) for v in nodes}


def _require_dag(g: PDAG) -> None:
    if not g.is_directed:
        raise GraphError("this operation is defined for DAGs only")


def is_d_separated(
    g: PDAG, a: Iterable[Node], b: Iterable[Node], c: Iterable[Node] = ()
) -> bool:
    """Are the sets ``a`` and ``b`` d-separated given ``c`` in the DAG ``g``?

    True iff no path from ``a`` to ``b`` is d-connecting given ``c``:
    on a d-connecting path every collider (or one of its descendants)
    is in ``c`` and no non-collider is.

    Raises
    ------
    GraphError
        If ``g`` is not a DAG, the sets overlap, or ``a``/``b`` is empty.
    """
    _require_dag(g)
    sa = _as_index_set(g, a)
    sb = _as_index_set(g, b)
    sc = _as_index_set(g, c)
    if not sa or not sb:
        raise GraphError("both endpoint sets must be non-empty")
    if sa & sb or sa & sc or sb & sc:
        raise GraphError("the three node sets must be pairwise disjoint")

    amat = g._amat
    p = g.num_nodes
    children = [np.nonzero(amat[i])[0] for i in range(p)]
    parents = [np.nonzero(amat[:, i])[0] for i in range(p)]

    # ancestors of c (including c): colliders may pass the walk there
    anc_c = set(sc)
    queue = deque(sc)
    while queue:
        v = queue.popleft()
        for w in parents[v]:
            if int(w) not in anc_c:
                anc_c.add(int(w))
                queue.append(int(w))

    # states: (node, came_from_parent); start as if arriving from a child
    seen: set[tuple[int, bool]] = set()
    queue = deque((s, False) for s in sa)
    while queue:
        v, from_parent = queue.popleft()
        if (v, from_parent) in seen:
            continue
        seen.add((v, from_parent))
        if v in sb:
            return False
        if not from_parent:
            # trail continues through a non-collider
            if v not in sc:
                for w in parents[v]:
                    queue.append((int(w), False))
                for w in children[v]:
                    queue.append((int(w), True))
        else:
            if v not in sc:
                for w in children[v]:
                    queue.append((int(w), True))
            if v in anc_c:
                # collider open: v is in c or has a descendant in c
                for w in parents[v]:
                    queue.append((int(w), False))
    return True


def markov_equivalent(d1: PDAG, d2: PDAG) -> bool:
    """Same skeleton and same v-structures.

    Raises
    ------
    GraphError
        If the node sets differ or either graph is not a DAG.
    """
    _require_dag(d1)
    _require_dag(d2)
    if set(d1.nodes) != set(d2.nodes):
        raise GraphError("graphs must share the same node set")
    return d1.skeleton() == d2.skeleton() and v_structures(d1) == v_structures(d2)


def cpdag_of(d: PDAG) -> PDAG:
    """CPDAG of the equivalence class of the DAG ``d``.

    Keeps the skeleton, directs the v-structure edges, and closes under
    Meek's rules 1-3.  Every directed edge of the result is oriented the
    same way in every DAG equivalent to ``d``; every undirected edge is
    reversible within the class.
    """
    _require_dag(d)
    amat = (d._amat | d._amat.T).copy()
    for a, b, c in v_structures(d):
        i, j, k = d.index_of(a), d.index_of(b), d.index_of(c)
        amat[j, i] = False
        amat[j, k] = False
    start = PDAG._from_amat(d.nodes, amat)
    return meek_closure(start, rules=(1, 2, 3))
