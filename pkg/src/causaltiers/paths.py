"""Causal path classification on partially directed graphs.

A path is possibly causal when none of its own edges is traversed
against its direction.  The b-variant additionally forbids any edge of
the graph from a later path node back to an earlier one; it is the
notion that stays sound on graphs with partially directed cycles.  On
graphs without such cycles the two classifications coincide, which
:func:`check_adjustment_equivalence` verifies exhaustively.
"""

from __future__ import annotations

import enum
import itertools as itr
from dataclasses import dataclass
from typing import Sequence

from .graphs import Node, PDAG


class PathVerdict(enum.Enum):
    POSSIBLY_CAUSAL = "possibly-causal"
    NON_CAUSAL = "non-causal"


class BPathVerdict(enum.Enum):
    B_POSSIBLY_CAUSAL = "b-possibly-causal"
    B_NON_CAUSAL = "b-non-causal"


def classify_possibly_causal(g: PDAG, path: Sequence[Node]) -> PathVerdict:
    """Possibly causal iff no edge on the path points backwards."""
    g.check_path(path)
    for u, v in zip(path, path[1:]):
        if g.has_directed(v, u):
            return PathVerdict.NON_CAUSAL
    return PathVerdict.POSSIBLY_CAUSAL


def classify_b_possibly_causal(g: PDAG, path: Sequence[Node]) -> BPathVerdict:
    """B-possibly causal iff no edge of ``g`` (on or off the path) points
    from a later path node to a strictly earlier one."""
    g.check_path(path)
    for i, j in itr.combinations(range(len(path)), 2):
        if g.has_directed(path[j], path[i]):
            return BPathVerdict.B_NON_CAUSAL
    return BPathVerdict.B_POSSIBLY_CAUSAL


@dataclass(frozen=True)
class AdjustmentEquivalenceReport:
    paths_checked: int
    counterexample: tuple[Node, ...] | None

    @property
    def equivalent(self) -> bool:
        return self.counterexample is None


def check_adjustment_equivalence(
    g: PDAG, max_path_edges: int = 10
) -> AdjustmentEquivalenceReport:
    """Verify that both classifications coincide on every path of ``g``.

    Scans all simple paths up to ``max_path_edges`` edges between all
    ordered node pairs and returns the first path where the verdicts
    differ, if any.  On graphs free of partially directed cycles there
    is none; the construction that breaks it is an undirected path whose
    endpoints are also joined by a directed edge.
    """
    checked = 0
    for s, t in itr.permutations(g.nodes, 2):
        for path in g.simple_paths(s, t, max_edges=max_path_edges):
            checked += 1
            plain = classify_possibly_causal(g, path) is PathVerdict.POSSIBLY_CAUSAL
            strict = (
                classify_b_possibly_causal(g, path)
                is BPathVerdict.B_POSSIBLY_CAUSAL
            )
            if plain != strict:
                return AdjustmentEquivalenceReport(checked, tuple(path))
    return AdjustmentEquivalenceReport(checked, None)
