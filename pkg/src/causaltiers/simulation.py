"""Simulation harness: how much do tiered orderings orient on random graphs?

For each replication a random DAG is drawn, its CPDAG is built from the
independence model (no finite-sample noise), and for each tier scheme
the maximally oriented graph is constructed.  The recorded gain is the
number of newly directed edges divided by the total edge count.

Randomness policy: every replication owns a Philox stream derived from
``(seed, nodes, density, generator, rep)`` via ``SeedSequence`` spawn
keys.  The stream does not depend on the tier scheme, so all schemes
see the same DAG within a replication, and cells can run in any order
or in parallel with bit-identical results.
"""

from __future__ import annotations

import csv
import io
import itertools as itr
import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import GraphError, PDAG
from .independence import cpdag_of
from .orientation import tiered_mpdag
from .tiers import TieredOrdering

#: expected number of adjacent nodes per density class
DENSITY_NEIGHBOURS = {"sparse": 2.0, "dense": 5.0}
GENERATORS = ("er", "power", "geometric")

CSV_COLUMNS = (
    "nodes",
    "density",
    "generator",
    "scheme",
    "rep",
    "n_edges",
    "n_dir_cpdag",
    "n_dir_mpdag",
    "gain_frac",
)


@dataclass(frozen=True)
class TierScheme:
    """Coarsening of the five equal base tiers into scheme tiers."""

    name: str
    base_to_scheme: tuple[int, int, int, int, int]


#: the five schemes compared by the study: full detail, early/late
#: knowledge at two levels of detail
TIER_SCHEMES = {
    s.name: s
    for s in (
        TierScheme("full", (1, 2, 3, 4, 5)),
        TierScheme("early1", (1, 2, 2, 2, 2)),
        TierScheme("early2", (1, 2, 3, 3, 3)),
        TierScheme("late1", (1, 1, 1, 1, 2)),
        TierScheme("late2", (1, 1, 1, 2, 3)),
    )
}


@dataclass(frozen=True)
class SimCell:
    nodes: int
    density: str
    generator: str

    def __post_init__(self):
        if self.nodes < 2:
            raise GraphError("a cell needs at least 2 nodes")
        if self.density not in DENSITY_NEIGHBOURS:
            raise GraphError(f"density must be one of {sorted(DENSITY_NEIGHBOURS)}")
        if self.generator not in GENERATORS:
            raise GraphError(f"generator must be one of {GENERATORS}")


@dataclass(frozen=True)
class SimConfig:
    node_counts: tuple[int, ...] = (10, 25, 50, 100)
    densities: tuple[str, ...] = ("sparse", "dense")
    generators: tuple[str, ...] = GENERATORS
    replications: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.replications < 1:
            raise GraphError("replications must be >= 1")

    def cells(self) -> list[SimCell]:
        return [
            SimCell(n, d, g)
            for n, d, g in itr.product(self.node_counts, self.densities, self.generators)
        ]


@dataclass(frozen=True)
class SimRecord:
    nodes: int
    density: str
    generator: str
    scheme: str
    rep: int
    n_edges: int
    n_dir_cpdag: int
    n_dir_mpdag: int
    gain_frac: float

    def __post_init__(self):
        if self.n_dir_mpdag < self.n_dir_cpdag:
            raise GraphError("an oriented graph cannot lose directed edges")
        if not 0.0 <= self.gain_frac <= 1.0:
            raise GraphError("gain fraction out of [0, 1]")


# === random graph generation


def _er_skeleton(p: int, degree: float, rng) -> list[tuple[int, int]]:
    pairs = list(itr.combinations(range(p), 2))
    q = degree / (p - 1)
    mask = rng.random(len(pairs)) < q
    return [pair for pair, keep in zip(pairs, mask) if keep]


def _power_skeleton(p: int, degree: float, rng) -> list[tuple[int, int]]:
    """Preferential attachment with a fractional edges-per-node budget.

    Node i joins min(i, m + Bernoulli(f)) earlier nodes, picked with
    probability proportional to degree + 1.  (m, f) are calibrated so
    the expected mean degree is exactly ``degree``.
    """
    target = p * degree / 2.0

    def expected_total(m: int) -> float:
        return float(sum(min(i, m) for i in range(1, p)))

    m = 0
    while m < p and expected_total(m + 1) <= target:
        m += 1
    lo, hi = expected_total(m), expected_total(m + 1)
    frac = 0.0 if hi <= lo else min(1.0, (target - lo) / (hi - lo))

    deg = np.zeros(p, dtype=float)
    edges: list[tuple[int, int]] = []
    for i in range(1, p):
        k = m + (1 if rng.random() < frac else 0)
        k = min(i, k)
        if k == 0:
            continue
        available = list(range(i))
        for _ in range(k):
            weights = deg[available] + 1.0
            probs = weights / weights.sum()
            pick = int(rng.choice(len(available), p=probs))
            j = available.pop(pick)
            edges.append((j, i))
            deg[j] += 1
            deg[i] += 1
    return edges


def _pair_distance_cdf(r: float) -> float:
    """P(distance <= r) for two uniform points in the unit square, r <= 1."""
    return math.pi * r * r - 8.0 / 3.0 * r**3 + 0.5 * r**4


def _geometric_radius(p: int, degree: float) -> float:
    """Radius giving an exact expected degree on the unit square."""
    target = degree / (p - 1)
    if target >= _pair_distance_cdf(1.0):
        return 1.5  # denser than any unit radius: connect everything
    lo, hi = 0.0, 1.0
    for _ in range(60):
        mid = (lo + hi) / 2.0
        if _pair_distance_cdf(mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _geometric_skeleton(p: int, degree: float, rng) -> list[tuple[int, int]]:
    pts = rng.random((p, 2))
    r = _geometric_radius(p, degree)
    edges = []
    for i, j in itr.combinations(range(p), 2):
        if float(np.hypot(*(pts[i] - pts[j]))) <= r:
            edges.append((i, j))
    return edges


_SKELETONS = {
    "er": _er_skeleton,
    "power": _power_skeleton,
    "geometric": _geometric_skeleton,
}


def random_dag(p: int, expected_neighbours: float, generator: str, rng) -> PDAG:
    """Random DAG whose skeleton follows the chosen attachment model.

    Edges are directed along a uniformly random topological order, and
    nodes are labelled ``V0 .. V{p-1}`` in that order, so the label
    order is topological and any ordering built from contiguous label
    blocks is consistent by construction.
    """
    if p < 2:
        raise GraphError("need at least 2 nodes")
    if not 0 <= expected_neighbours < p:
        raise GraphError("expected neighbour count must be in [0, p)")
    if generator not in _SKELETONS:
        raise GraphError(f"generator must be one of {GENERATORS}")
    skeleton = _SKELETONS[generator](p, expected_neighbours, rng)
    rank = {int(v): k for k, v in enumerate(rng.permutation(p))}
    names = [f"V{k}" for k in range(p)]
    directed = []
    for a, b in skeleton:
        i, j = rank[a], rank[b]
        if i > j:
            i, j = j, i
        directed.append((names[i], names[j]))
    return PDAG(names, directed=directed)


# === tier schemes on generated DAGs


def base_tier_sizes(p: int) -> list[int]:
    """Five contiguous blocks of near-equal size, remainders to the
    earliest tiers."""
    q, r = divmod(p, 5)
    return [q + 1 if t < r else q for t in range(5)]


def scheme_ordering(scheme: TierScheme | str, p: int) -> TieredOrdering:
    """Tiered ordering that ``scheme`` induces on ``V0 .. V{p-1}``."""
    if isinstance(scheme, str):
        scheme = TIER_SCHEMES[scheme]
    assignment = {}
    k = 0
    for base, size in enumerate(base_tier_sizes(p), start=1):
        for _ in range(size):
            assignment[f"V{k}"] = scheme.base_to_scheme[base - 1]
            k += 1
    return TieredOrdering(assignment)


# === running cells


def _replication_rng(seed: int, cell: SimCell, rep: int):
    key = (
        cell.nodes,
        sorted(DENSITY_NEIGHBOURS).index(cell.density),
        GENERATORS.index(cell.generator),
        rep,
    )
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=key)))


def run_cell(
    cell: SimCell,
    schemes: TierScheme | str | Sequence[TierScheme | str],
    replications: int,
    seed: int = 0,
) -> list[SimRecord]:
    """All records for one cell: ``replications`` DAG draws, one record
    per draw and scheme.  The DAG stream depends only on (seed, cell,
    rep), so every scheme is evaluated on the same DAGs."""
    if isinstance(schemes, (TierScheme, str)):
        schemes = [schemes]
    schemes = [TIER_SCHEMES[s] if isinstance(s, str) else s for s in schemes]
    if replications < 1:
        raise GraphError("replications must be >= 1")
    records = []
    degree = DENSITY_NEIGHBOURS[cell.density]
    for rep in range(replications):
        rng = _replication_rng(seed, cell, rep)
        dag = random_dag(cell.nodes, degree, cell.generator, rng)
        cpdag = cpdag_of(dag)
        n_edges = dag.num_edges
        n_dir_c = len(cpdag.directed_edges)
        for scheme in schemes:
            ordering = scheme_ordering(scheme, cell.nodes)
            mpdag = tiered_mpdag(cpdag, ordering)
            n_dir_g = len(mpdag.directed_edges)
            gain = (n_dir_g - n_dir_c) / n_edges if n_edges else 0.0
            records.append(
                SimRecord(
                    nodes=cell.nodes,
                    density=cell.density,
                    generator=cell.generator,
                    scheme=scheme.name,
                    rep=rep,
                    n_edges=n_edges,
                    n_dir_cpdag=n_dir_c,
                    n_dir_mpdag=n_dir_g,
                    gain_frac=gain,
                )
            )
    return records


def run_config(config: SimConfig, schemes=tuple(TIER_SCHEMES)) -> list[SimRecord]:
    records = []
    for cell in config.cells():
        records.extend(run_cell(cell, schemes, config.replications, config.seed))
    return records


# === output


def write_csv(records: Sequence[SimRecord], fileobj) -> None:
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.nodes,
                r.density,
                r.generator,
                r.scheme,
                r.rep,
                r.n_edges,
                r.n_dir_cpdag,
                r.n_dir_mpdag,
                repr(r.gain_frac),
            ]
        )


def read_csv(fileobj) -> list[SimRecord]:
    reader = csv.DictReader(fileobj)
    out = []
    for row in reader:
        out.append(
            SimRecord(
                nodes=int(row["nodes"]),
                density=row["density"],
                generator=row["generator"],
                scheme=row["scheme"],
                rep=int(row["rep"]),
                n_edges=int(row["n_edges"]),
                n_dir_cpdag=int(row["n_dir_cpdag"]),
                n_dir_mpdag=int(row["n_dir_mpdag"]),
                gain_frac=float(row["gain_frac"]),
            )
        )
    return out


@dataclass(frozen=True)
class SummaryRow:
    nodes: int
    density: str
    generator: str
    scheme: str
    count: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float


def summarize(records: Sequence[SimRecord]) -> list[SummaryRow]:
    """Per-cell five-number summaries of the orientation gain."""
    groups: dict[tuple, list[float]] = {}
    for r in records:
        groups.setdefault((r.nodes, r.density, r.generator, r.scheme), []).append(
            r.gain_frac
        )
    rows = []
    for key in sorted(groups, key=str):
        values = np.array(groups[key])
        q1, med, q3 = np.quantile(values, [0.25, 0.5, 0.75])
        rows.append(
            SummaryRow(
                *key,
                count=len(values),
                minimum=float(values.min()),
                q1=float(q1),
                median=float(med),
                q3=float(q3),
                maximum=float(values.max()),
            )
        )
    return rows


def emit_results(
    records: Sequence[SimRecord],
    csv_path,
    boxplot_path=None,
) -> list[SummaryRow]:
    """Write the record CSV (and optional boxplot JSON); return summaries.

    Raises
    ------
    GraphError
        If ``records`` is empty.
    """
    if not records:
        raise GraphError("no records to emit")
    with open(csv_path, "w", newline="") as fh:
        write_csv(records, fh)
    summary = summarize(records)
    if boxplot_path is not None:
        payload = {
            "gain_frac_boxplots": [
                {
                    "nodes": s.nodes,
                    "density": s.density,
                    "generator": s.generator,
                    "scheme": s.scheme,
                    "count": s.count,
                    "whisker_low": s.minimum,
                    "q1": s.q1,
                    "median": s.median,
                    "q3": s.q3,
                    "whisker_high": s.maximum,
                }
                for s in summary
            ]
        }
        with open(boxplot_path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return summary


def records_to_csv_bytes(records: Sequence[SimRecord]) -> bytes:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue().encode()
