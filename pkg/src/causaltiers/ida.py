"""Candidate parent-set enumeration (local and joint IDA).

On graphs whose chain components can be oriented independently of the
directed part, the original local and joint procedures apply without
any validity post-check.  The local variant screens subsets of a node's
neighbours for new colliders at that node; the joint variant orients
whole chain components and combines the results across components.
"""

from __future__ import annotations

import itertools as itr
from collections import Counter
from typing import Iterable, Mapping, Sequence

from .graphs import GraphError, Node, PDAG
from .orientation import enumerate_class


class ParentSetMultiset:
    """Multiset of candidate parent sets (or tuples of parent sets).

    Keys are frozensets for a single node and tuples of frozensets for a
    node set; multiplicities are exact integers.
    """

    def __init__(self, entries: Iterable = ()):
        self._counts: Counter = Counter(entries)

    @property
    def counts(self) -> dict:
        return dict(self._counts)

    def distinct(self) -> frozenset:
        return frozenset(self._counts)

    def multiplicity(self, entry) -> int:
        return self._counts.get(entry, 0)

    def total(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParentSetMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __len__(self) -> int:
        return len(self._counts)

    def __iter__(self):
        return iter(self._counts.items())

    def __repr__(self) -> str:
        def fmt(entry):
            if isinstance(entry, frozenset):
                return "{" + ",".join(sorted(map(str, entry))) + "}"
            return "(" + ", ".join(fmt(e) for e in entry) + ")"

        parts = [f"{fmt(e)} x{m}" for e, m in sorted(self._counts.items(), key=str)]
        return f"ParentSetMultiset({', '.join(parts)})"


def local_ida(g: PDAG, x: Node) -> ParentSetMultiset:
    """Candidate parent sets of ``x``: for every subset S of x's
    neighbours that can be oriented into ``x`` without creating a new
    collider at ``x``, the set parents(x) | S."""
    pa = frozenset(g.parents_of(x))
    nb = list(g.neighbors_of(x))
    entries = []
    for r in range(len(nb) + 1):
        for s in itr.combinations(nb, r):
            if _no_new_collider_at(g, x, s, pa):
                entries.append(pa | frozenset(s))
    return ParentSetMultiset(entries)


def _no_new_collider_at(
    g: PDAG, x: Node, s: Sequence[Node], pa: frozenset[Node]
) -> bool:
    """Orienting s -> x (and the other neighbours out of x) adds no
    unshielded collider at x iff s is a clique all of whose members are
    adjacent to every existing parent of x."""
    for a, b in itr.combinations(s, 2):
        if not g.has_edge(a, b):
            return False
    for a in s:
        for p in pa:
            if not g.has_edge(a, p):
                return False
    return True


def joint_ida(
    g: PDAG, xs: Sequence[Node], max_component_undirected: int = 16
) -> ParentSetMultiset:
    """Jointly valid parent sets of the nodes ``xs``.

    Chain components touching ``xs`` are oriented into DAGs independently;
    each combination of component orientations yields one tuple of parent
    sets (ordered like ``xs``), combined with the parents contributed by
    the directed part.

    Raises
    ------
    GraphError
        On duplicate or unknown nodes, or when a component exceeds the
        orientation enumeration limit.
    """
    xs = list(xs)
    if len(set(xs)) != len(xs):
        raise GraphError("query nodes must be distinct")
    for x in xs:
        g.index_of(x)

    dir_parents = {x: frozenset(g.parents_of(x)) for x in xs}

    components = [
        comp for comp in g.chain_components() if len(comp) > 1 and set(comp) & set(xs)
    ]
    per_component: list[list[Mapping[Node, frozenset[Node]]]] = []
    for comp in components:
        sub = g.undirected_subgraph().induced_subgraph(comp)
        dags = enumerate_class(sub, max_undirected=max_component_undirected)
        assignments = []
        for dag in dags:
            assignments.append(
                {x: frozenset(dag.parents_of(x)) for x in comp if x in set(xs)}
            )
        per_component.append(assignments)

    entries = []
    for combo in itr.product(*per_component) if per_component else [()]:
        merged: dict[Node, frozenset[Node]] = {}
        for assignment in combo:
            merged.update(assignment)
        entries.append(
            tuple(dir_parents[x] | merged.get(x, frozenset()) for x in xs)
        )
    return ParentSetMultiset(entries)
