"""Tiered orderings and their comparison on a CPDAG.

A tiered ordering assigns every node to one tier; it forbids all edges
pointing from a later tier into an earlier one and nothing else.  Two
consistent orderings can induce the same maximally oriented graph even
when they differ; the equivalence test here decides that graphically,
by comparing (i) the first cross-tier edges on earliest unshielded
paths and (ii) the fully shielded cross-tier edges, both computed on
the undirected part of the CPDAG oriented by each ordering.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import DEFAULT_PATH_NODE_LIMIT, Edge, GraphError, LimitError, Node, PDAG
from .orientation import (
    BackgroundKnowledge,
    InconsistentKnowledgeError,
    check_consistency,
    tiered_mpdag,
)


class IncompatibleOrderingsError(GraphError):
    """Two orderings disagree on the relative order of a node pair."""


class TieredOrdering:
    """Total assignment of nodes to integer tiers.

    Tier values only matter through their relative order: any strictly
    monotone relabelling describes the same ordering.

    Parameters
    ----------
    assignment:
        Mapping from node label to tier.  Every node of a graph this
        ordering is used with must be present.
    """

    __slots__ = ("_assignment",)

    def __init__(self, assignment: Mapping[Node, int]):
        items = dict(assignment)
        for v, t in items.items():
            if not isinstance(t, int):
                raise GraphError(f"tier of {v!r} must be an integer, got {t!r}")
        if not items:
            raise GraphError("an ordering needs at least one node")
        self._assignment = items

    @classmethod
    def from_tiers(cls, groups: Sequence[Iterable[Node]]) -> "TieredOrdering":
        """Build from groups of nodes listed earliest tier first."""
        assignment: dict[Node, int] = {}
        for t, group in enumerate(groups, start=1):
            for v in group:
                if v in assignment:
                    raise GraphError(f"node {v!r} assigned to more than one tier")
                assignment[v] = t
        return cls(assignment)

    @property
    def assignment(self) -> dict[Node, int]:
        return dict(self._assignment)

    @property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(self._assignment)

    def tier_of(self, v: Node) -> int:
        try:
            return self._assignment[v]
        except KeyError:
            raise GraphError(f"node {v!r} is not assigned to a tier") from None

    @property
    def num_tiers(self) -> int:
        return len(set(self._assignment.values()))

    def normalized(self) -> "TieredOrdering":
        """Relabel tiers to the contiguous range 1..T, preserving order."""
        levels = {t: i for i, t in enumerate(sorted(set(self._assignment.values())), 1)}
        return TieredOrdering({v: levels[t] for v, t in self._assignment.items()})

    def tier_groups(self) -> list[tuple[int, tuple[Node, ...]]]:
        """Tiers with their members, earliest first."""
        groups: dict[int, list[Node]] = {}
        for v, t in self._assignment.items():
            groups.setdefault(t, []).append(v)
        return [(t, tuple(groups[t])) for t in sorted(groups)]

    def forbidden_pairs(self, nodes: Iterable[Node] | None = None) -> set[Edge]:
        """Forbidden directed edges ``(tail, head)``: all later -> earlier pairs."""
        universe = list(self._assignment) if nodes is None else list(nodes)
        out = set()
        for a in universe:
            ta = self.tier_of(a)
            for b in universe:
                if ta < self.tier_of(b):
                    out.add((b, a))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TieredOrdering):
            return NotImplemented
        return self.normalized()._assignment == other.normalized()._assignment

    def __hash__(self) -> int:
        return hash(frozenset(self.normalized()._assignment.items()))

    def __repr__(self) -> str:
        groups = ["{" + " ".join(map(str, g)) + "}" for _, g in self.tier_groups()]
        return f"TieredOrdering({' < '.join(groups)})"


def forbidden_set(
    ordering: TieredOrdering, nodes: Iterable[Node] | None = None
) -> BackgroundKnowledge:
    """Background knowledge induced by ``ordering``: forbidden later ->
    earlier edges over ``nodes`` (defaults to the ordering's own nodes)
    and no required edges."""
    return BackgroundKnowledge(forbidden=ordering.forbidden_pairs(nodes))


# === refinement comparison


class Refinement(enum.Enum):
    EQUAL = "equal"
    FIRST_FINER = "first-finer"
    SECOND_FINER = "second-finer"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class TierComparison:
    verdict: Refinement
    #: strict orderings present in the first ordering only / second only
    only_in_first: frozenset[tuple[Node, Node]]
    only_in_second: frozenset[tuple[Node, Node]]


def _strict_pairs(ordering: TieredOrdering, nodes: Sequence[Node]) -> set[tuple[Node, Node]]:
    return {
        (a, b)
        for a in nodes
        for b in nodes
        if ordering.tier_of(a) < ordering.tier_of(b)
    }


def _check_same_nodes(t1: TieredOrdering, t2: TieredOrdering) -> list[Node]:
    if set(t1.nodes) != set(t2.nodes):
        raise GraphError("orderings are defined on different node sets")
    return list(t1.nodes)


def check_compatible(t1: TieredOrdering, t2: TieredOrdering) -> None:
    """Raise unless no node pair is ordered oppositely by ``t1`` and ``t2``."""
    nodes = _check_same_nodes(t1, t2)
    for a in nodes:
        for b in nodes:
            if t1.tier_of(a) < t1.tier_of(b) and t2.tier_of(a) > t2.tier_of(b):
                raise IncompatibleOrderingsError(
                    f"orderings contradict each other on ({a!r}, {b!r})"
                )


def compare_refinement(t1: TieredOrdering, t2: TieredOrdering) -> TierComparison:
    """Refinement relation between two compatible orderings.

    ``t1`` is finer than ``t2`` when every strict order of ``t2`` also
    holds strictly in ``t1``.
    """
    check_compatible(t1, t2)
    nodes = list(t1.nodes)
    s1 = _strict_pairs(t1, nodes)
    s2 = _strict_pairs(t2, nodes)
    if s1 == s2:
        verdict = Refinement.EQUAL
    elif s2 <= s1:
        verdict = Refinement.FIRST_FINER
    elif s1 <= s2:
        verdict = Refinement.SECOND_FINER
    else:
        verdict = Refinement.INCOMPARABLE
    return TierComparison(
        verdict, frozenset(s1 - s2), frozenset(s2 - s1)
    )


# === the undirected part of a CPDAG under an ordering


def orient_undirected_part(c: PDAG, ordering: TieredOrdering) -> PDAG:
    """Drop the directed edges of ``c``, then orient the remaining edges
    whose endpoints lie in different tiers (earlier tier first)."""
    h = c.undirected_subgraph()
    amat = h._amat.copy()
    for u, v in h.undirected_edges:
        tu, tv = ordering.tier_of(u), ordering.tier_of(v)
        i, j = h.index_of(u), h.index_of(v)
        if tu < tv:
            amat[j, i] = False
        elif tv < tu:
            amat[i, j] = False
    return PDAG._from_amat(h.nodes, amat)


def cross_tier_edges(c: PDAG, ordering: TieredOrdering) -> set[Edge]:
    """Ordered pairs ``(u, v)`` adjacent in the undirected part of ``c``
    with ``u`` in a strictly earlier tier than ``v``."""
    return {
        (u, v) if ordering.tier_of(u) < ordering.tier_of(v) else (v, u)
        for u, v in c.undirected_subgraph().undirected_edges
        if ordering.tier_of(u) != ordering.tier_of(v)
    }


def fully_shielded_edges(h: PDAG) -> list[tuple[Node, Node]]:
    """Edges occurring on no unshielded path: both endpoints have the
    same adjacency set apart from each other.  Computed on the skeleton."""
    out = []
    for u, v in sorted(
        list(h.undirected_edges) + list(h.directed_edges),
        key=lambda e: (h.index_of(e[0]), h.index_of(e[1])),
    ):
        adj_u = set(h.adjacent_to(u)) - {v}
        adj_v = set(h.adjacent_to(v)) - {u}
        if adj_u == adj_v:
            out.append((u, v) if h.index_of(u) < h.index_of(v) else (v, u))
    return out


def _component_paths(
    h: PDAG, component: Sequence[Node], max_nodes: int
) -> list[tuple[Node, ...]]:
    """Every unshielded path (>= 2 nodes) inside one chain component,
    each listed once, starting from its lower-index endpoint."""
    if len(component) > max_nodes:
        raise LimitError(
            f"component of {len(component)} nodes exceeds the path "
            f"enumeration limit of {max_nodes}"
        )
    sub = h.induced_subgraph(component)
    paths = []
    nodes = sub.nodes
    for si in range(len(nodes)):
        for ti in range(si + 1, len(nodes)):
            paths.extend(sub.find_unshielded_paths(nodes[si], nodes[ti]))
    return paths


def _edge_floor(
    paths: Sequence[tuple[Node, ...]], ordering: TieredOrdering
) -> dict[frozenset, int]:
    """For each edge: the lowest tier seen on any unshielded path through it."""
    floor: dict[frozenset, int] = {}
    for path in paths:
        m = min(ordering.tier_of(v) for v in path)
        for x, y in zip(path, path[1:]):
            key = frozenset((x, y))
            if m < floor.get(key, m + 1):
                floor[key] = m
    return floor


def _is_earliest(
    path: Sequence[Node],
    ordering: TieredOrdering,
    edge_floor: Mapping[frozenset, int],
) -> bool:
    """Earliest: the path shares no subpath with a strictly earlier path.

    Sharing a subpath means sharing an edge, and an earlier path through
    an edge exists precisely when some unshielded path through that edge
    visits a tier strictly below this path's own minimum.  Shielded
    detours do not count: orientation only travels along unshielded
    paths, so only those can pre-empt an edge.
    """
    m = min(ordering.tier_of(v) for v in path)
    for x, y in zip(path, path[1:]):
        if edge_floor[frozenset((x, y))] < m:
            return False
    return True


def _is_subpath(short: Sequence[Node], long: Sequence[Node]) -> bool:
    """Is ``short`` (or its reverse) a contiguous segment of ``long``?"""
    n, m = len(short), len(long)
    if n > m:
        return False
    fwd = tuple(short)
    rev = fwd[::-1]
    for i in range(m - n + 1):
        window = tuple(long[i : i + n])
        if window == fwd or window == rev:
            return True
    return False


def _maximal_paths(paths: list[tuple[Node, ...]]) -> list[tuple[Node, ...]]:
    """Drop every path that is a proper subpath of another listed path."""
    out = []
    for path in paths:
        if not any(
            other is not path and len(other) > len(path) and _is_subpath(path, other)
            for other in paths
        ):
            out.append(path)
    return out


def first_cross_tier_edges(
    path: Sequence[Node], ordering: TieredOrdering
) -> frozenset[Edge]:
    """First cross-tier edges of a path: walking outward from each run of
    minimum-tier nodes, the nearest edge whose endpoints lie in different
    tiers, oriented from the earlier tier.  At most two on paths whose
    tier profile has a single valley."""
    tiers = [ordering.tier_of(v) for v in path]
    m = min(tiers)
    runs = []
    i = 0
    while i < len(tiers):
        if tiers[i] == m:
            j = i
            while j + 1 < len(tiers) and tiers[j + 1] == m:
                j += 1
            runs.append((i, j))
            i = j + 1
        else:
            i += 1
    out = set()
    for a, b in runs:
        for i in range(a - 1, -1, -1):
            if tiers[i] != tiers[i + 1]:
                lo, hi = (i, i + 1) if tiers[i] < tiers[i + 1] else (i + 1, i)
                out.add((path[lo], path[hi]))
                break
        for i in range(b, len(tiers) - 1):
            if tiers[i] != tiers[i + 1]:
                lo, hi = (i, i + 1) if tiers[i] < tiers[i + 1] else (i + 1, i)
                out.add((path[lo], path[hi]))
                break
    return frozenset(out)


@dataclass(frozen=True)
class CrossTierEdgeReport:
    """Earliest unshielded paths with their first cross-tier edges, and
    the fully shielded cross-tier edges, all on the oriented undirected
    part of the CPDAG."""

    graph: PDAG  #: the undirected part oriented by the ordering
    earliest_paths: tuple[tuple[Node, ...], ...]
    first_edges: tuple[frozenset[Edge], ...]  #: aligned with earliest_paths
    fully_shielded_cross_tier: tuple[Edge, ...]

    @property
    def all_first_edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for edges in self.first_edges:
            out |= edges
        return frozenset(out)


def cross_tier_report(
    c: PDAG, ordering: TieredOrdering, max_nodes: int = DEFAULT_PATH_NODE_LIMIT
) -> CrossTierEdgeReport:
    """Summary of where ``ordering`` places cross-tier edges on the
    undirected part of ``c``; the ingredients of the equivalence
    criterion."""
    violations = check_consistency(c, ordering)
    if violations:
        listing = ", ".join(f"{u}->{v}" for u, v in violations)
        raise InconsistentKnowledgeError(
            f"ordering contradicts directed edges: {listing}"
        )
    h = c.undirected_subgraph()
    oriented = orient_undirected_part(c, ordering)
    cross = cross_tier_edges(c, ordering)

    shielded = [
        e for e in fully_shielded_edges(h) if e in cross or (e[1], e[0]) in cross
    ]
    shielded = [e if e in cross else (e[1], e[0]) for e in shielded]

    earliest: list[tuple[Node, ...]] = []
    firsts: list[frozenset[Edge]] = []
    for component in h.chain_components():
        if len(component) < 2:
            continue
        paths = _component_paths(h, component, max_nodes)
        floor = _edge_floor(paths, ordering)
        kept = [path for path in paths if _is_earliest(path, ordering, floor)]
        for path in _maximal_paths(kept):
            earliest.append(path)
            firsts.append(first_cross_tier_edges(path, ordering))
    return CrossTierEdgeReport(
        graph=oriented,
        earliest_paths=tuple(earliest),
        first_edges=tuple(firsts),
        fully_shielded_cross_tier=tuple(shielded),
    )


# === equivalence and informativeness


@dataclass(frozen=True)
class TierEquivalence:
    equivalent: bool
    #: a directed edge the two orderings disagree on, when not equivalent
    witness: Edge | None
    first_edges_agree: bool  #: criterion condition on earliest unshielded paths
    shielded_agree: bool  #: criterion condition on fully shielded edges

    def __bool__(self) -> bool:
        return self.equivalent


def tiers_equivalent(
    c: PDAG,
    t1: TieredOrdering,
    t2: TieredOrdering,
    max_nodes: int = DEFAULT_PATH_NODE_LIMIT,
) -> TierEquivalence:
    """Do ``t1`` and ``t2`` induce the same maximally oriented graph on ``c``?

    Decided graphically: the orderings are equivalent iff they agree on
    the first cross-tier edges of every earliest unshielded path and on
    every fully shielded cross-tier edge.
    """
    check_compatible(t1, t2)
    for ordering in (t1, t2):
        violations = check_consistency(c, ordering)
        if violations:
            listing = ", ".join(f"{u}->{v}" for u, v in violations)
            raise InconsistentKnowledgeError(
                f"ordering contradicts directed edges: {listing}"
            )

    h = c.undirected_subgraph()
    cross1 = cross_tier_edges(c, t1)
    cross2 = cross_tier_edges(c, t2)

    witness: Edge | None = None
    shielded_agree = True
    for u, v in fully_shielded_edges(h):
        s1 = (u, v) if (u, v) in cross1 else (v, u) if (v, u) in cross1 else None
        s2 = (u, v) if (u, v) in cross2 else (v, u) if (v, u) in cross2 else None
        if s1 != s2:
            shielded_agree = False
            if witness is None:
                witness = s1 if s1 is not None else s2

    first_agree = True
    for component in h.chain_components():
        if len(component) < 2:
            continue
        paths = _component_paths(h, component, max_nodes)
        floor1 = _edge_floor(paths, t1)
        floor2 = _edge_floor(paths, t2)
        earliest1 = _maximal_paths([p for p in paths if _is_earliest(p, t1, floor1)])
        earliest2 = _maximal_paths([p for p in paths if _is_earliest(p, t2, floor2)])
        for path in sorted(set(earliest1) | set(earliest2), key=str):
            f1 = first_cross_tier_edges(path, t1)
            f2 = first_cross_tier_edges(path, t2)
            if f1 != f2:
                first_agree = False
                if witness is None:
                    diff = sorted(f1 ^ f2, key=str)
                    witness = diff[0]
    equivalent = shielded_agree and first_agree
    return TierEquivalence(
        equivalent=equivalent,
        witness=None if equivalent else witness,
        first_edges_agree=first_agree,
        shielded_agree=shielded_agree,
    )


class Informativeness(enum.Enum):
    MORE_INFORMATIVE = "more-informative"
    EQUIVALENT = "equivalent"
    LESS_INFORMATIVE = "less-informative"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class InformativenessResult:
    verdict: Informativeness
    #: sufficient-condition diagnostics; the verdict itself is decided by
    #: containment of the constructed graphs
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    condition_iv: bool

    @property
    def sufficient_conditions_fired(self) -> bool:
        return (
            self.condition_i
            and self.condition_ii
            and (self.condition_iii or self.condition_iv)
        )


def contained_in(g1: PDAG, g2: PDAG) -> bool:
    """Same skeleton and every directed edge of ``g2`` also in ``g1``."""
    if g1.skeleton() != g2.skeleton():
        return False
    return set(g2.directed_edges) <= set(g1.directed_edges)


def tiers_more_informative(
    c: PDAG,
    t1: TieredOrdering,
    t2: TieredOrdering,
    max_nodes: int = DEFAULT_PATH_NODE_LIMIT,
) -> InformativenessResult:
    """Compare how much ``t1`` and ``t2`` orient on ``c``.

    The verdict comes from containment of the two maximally oriented
    graphs; the sufficient graphical conditions are reported alongside
    as diagnostics (they imply, but are not implied by, the verdict).
    """
    g1 = tiered_mpdag(c, t1)
    g2 = tiered_mpdag(c, t2)
    if g1 == g2:
        verdict = Informativeness.EQUIVALENT
    elif contained_in(g1, g2):
        verdict = Informativeness.MORE_INFORMATIVE
    elif contained_in(g2, g1):
        verdict = Informativeness.LESS_INFORMATIVE
    else:
        verdict = Informativeness.INCOMPARABLE

    r1 = cross_tier_report(c, t1, max_nodes=max_nodes)
    r2 = cross_tier_report(c, t2, max_nodes=max_nodes)
    cross1 = cross_tier_edges(c, t1)
    cross2 = cross_tier_edges(c, t2)
    cond_i = all(e in cross1 for e in r2.all_first_edges)
    cond_ii = all(e in cross1 for e in r2.fully_shielded_cross_tier)
    cond_iii = any(e not in cross2 for e in r1.all_first_edges)
    cond_iv = len(r1.fully_shielded_cross_tier) > len(r2.fully_shielded_cross_tier)
    return InformativenessResult(verdict, cond_i, cond_ii, cond_iii, cond_iv)
