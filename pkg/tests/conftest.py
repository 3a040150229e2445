from pathlib import Path

import numpy as np
import pytest

from causaltiers import PDAG, TieredOrdering, cpdag_of

FIXTURES = Path(__file__).parent / "fixtures"

WAVE_ARCS = [
    ("A", "B"),
    ("A", "C"),
    ("B", "E"),
    ("C", "D"),
    ("C", "F"),
    ("D", "E"),
    ("F", "G"),
]


@pytest.fixture
def wave_dag():
    return PDAG("ABCDEFG", directed=WAVE_ARCS)


@pytest.fixture
def wave_cpdag(wave_dag):
    return cpdag_of(wave_dag)


@pytest.fixture
def wave_mpdag():
    return PDAG(
        "ABCDEFG",
        directed=[
            ("A", "C"),
            ("B", "E"),
            ("C", "D"),
            ("C", "F"),
            ("D", "E"),
            ("F", "G"),
        ],
        undirected=[("A", "B")],
    )


@pytest.fixture
def wave_tau():
    return TieredOrdering.from_tiers([["A", "B"], ["C", "D", "E"], ["F", "G"]])


def random_dag_instance(rng, p, degree):
    """ER DAG over labels V0..V{p-1}, arcs pointing label-ascending."""
    q = min(1.0, degree / (p - 1))
    arcs = [
        (f"V{i}", f"V{j}")
        for i in range(p)
        for j in range(i + 1, p)
        if rng.random() < q
    ]
    return PDAG([f"V{k}" for k in range(p)], directed=arcs)


def random_coarsening(rng, p):
    """Random tiered ordering consistent with the label order."""
    n_cuts = int(rng.integers(0, p))
    if p > 1 and n_cuts:
        cuts = sorted(
            int(c) for c in rng.choice(np.arange(1, p), size=min(n_cuts, p - 1), replace=False)
        )
    else:
        cuts = []
    tiers = {}
    tier, ci = 1, 0
    for k in range(p):
        while ci < len(cuts) and k >= cuts[ci]:
            tier += 1
            ci += 1
        tiers[f"V{k}"] = tier
    return TieredOrdering(tiers)


def random_cpdag_and_tau(rng, p, degree):
    """A CPDAG plus a consistent tiered ordering, drawn from one DAG so
    the ordering is correct by construction."""
    dag = random_dag_instance(rng, p, degree)
    return cpdag_of(dag), random_coarsening(rng, p), dag
