"""Randomized campaigns: planted instances classified against ground truth.

Each trial plants a triangle-tiled base graph, derives a second graph by
relabeling (isomorphic case) or by an edge swap plus relabeling (likely
non-isomorphic case), runs the decision pipeline, and files the outcome
into exactly one category.  Misses on known-isomorphic pairs are archived
with everything needed to replay them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .graphs import Graph, apply_permutation, parse_edge_list, to_edge_list_text
from .oracle import RECOMMENDED_MAX_N, brute_force_isomorphism
from .pipeline import (
    DEFAULT_CAP,
    DEFAULT_RETRY_BUDGET,
    KIND_INFEASIBLE,
    KIND_NO_WITNESS,
    KIND_WITNESS,
    MODE_COMPRESSED,
    MODE_EXACT,
    Options,
    Verdict,
    decide,
)

__all__ = [
    "CounterexampleRecord",
    "ModeDisagreement",
    "FuzzReport",
    "planted_graph",
    "random_relabeling",
    "perturb_edges",
    "trial_rng",
    "run_trials",
    "replay_record",
]

MODE_BOTH = "both"


def trial_rng(master_seed: int, index: int) -> random.Random:
    # Fixed splitting rule so trials are independent of execution order.
    return random.Random((master_seed << 20) ^ index)


def planted_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    """Random graph with floor(n/3) planted vertex-disjoint triangles.

    Remaining vertex pairs become edges independently with ``edge_prob``.
    """
    verts = list(range(n))
    rng.shuffle(verts)
    edges: set[tuple[int, int]] = set()
    for t in range(n // 3):
        a, b, c = verts[3 * t : 3 * t + 3]
        for u, v in ((a, b), (a, c), (b, c)):
            edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))


def random_relabeling(g: Graph, rng: random.Random) -> Graph:
    p = list(range(g.n))
    rng.shuffle(p)
    return apply_permutation(g, p)


def perturb_edges(g: Graph, rng: random.Random) -> Graph:
    """Move one edge to a random vacant pair (keeps the edge count)."""
    present = g.edges()
    absent = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    if not present:
        return g
    edges = set(present)
    edges.discard(present[rng.randrange(len(present))])
    if absent:
        edges.add(absent[rng.randrange(len(absent))])
    return Graph(g.n, sorted(edges))


@dataclass(frozen=True)
class CounterexampleRecord:
    """Everything needed to replay one archived miss."""

    index: int
    category: str  # no_witness_on_isomorphic | unsound_witness | precheck_unsound
    g_text: str
    h_text: str
    planted_isomorphic: bool
    mode: str
    cap: int
    retry_budget: int
    verdict_kind: str
    reasons: tuple[str, ...]
    diagnostics: dict

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "category": self.category,
            "g": self.g_text,
            "h": self.h_text,
            "planted_isomorphic": self.planted_isomorphic,
            "mode": self.mode,
            "cap": self.cap,
            "retry_budget": self.retry_budget,
            "verdict_kind": self.verdict_kind,
            "reasons": list(self.reasons),
            "diagnostics": self.diagnostics,
        }


@dataclass(frozen=True)
class ModeDisagreement:
    index: int
    g_text: str
    h_text: str
    planted_isomorphic: bool
    exact_kind: str
    compressed_kind: str
    cap: int
    retry_budget: int

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "g": self.g_text,
            "h": self.h_text,
            "planted_isomorphic": self.planted_isomorphic,
            "exact_kind": self.exact_kind,
            "compressed_kind": self.compressed_kind,
            "cap": self.cap,
            "retry_budget": self.retry_budget,
        }


@dataclass
class FuzzReport:
    n: int
    trials: int
    seed: int
    edge_prob: float
    mode: str
    oracle_enabled: bool
    cap: int
    retry_budget: int
    agreements: int = 0
    sound_witnesses: int = 0
    infeasible_count: int = 0
    precheck_rejections: int = 0
    precheck_oracle_checked: int = 0
    precheck_oracle_agreed: int = 0
    planted_isomorphic_trials: int = 0
    witnesses_on_planted: int = 0
    counterexamples: list[CounterexampleRecord] = field(default_factory=list)
    mode_disagreements: list[ModeDisagreement] = field(default_factory=list)

    def partition_ok(self) -> bool:
        """Categories must partition the trials exactly."""
        return self.trials == (
            self.agreements
            + len(self.counterexamples)
            + self.infeasible_count
            + self.precheck_rejections
        )

    def completeness_rate(self) -> float | None:
        """Witness rate over planted-isomorphic, arrangement-feasible trials."""
        if self.planted_isomorphic_trials == 0:
            return None
        return self.witnesses_on_planted / self.planted_isomorphic_trials

    def to_json_dict(self) -> dict:
        rate = self.completeness_rate()
        return {
            "schema": 1,
            "n": self.n,
            "trials": self.trials,
            "seeds": {"master": self.seed, "rule": "(master << 20) ^ index"},
            "edge_prob": self.edge_prob,
            "mode": self.mode,
            "oracle_enabled": self.oracle_enabled,
            "cap": self.cap,
            "retry_budget": self.retry_budget,
            "agreements": self.agreements,
            "sound_witnesses": self.sound_witnesses,
            "infeasible_count": self.infeasible_count,
            "precheck_rejections": self.precheck_rejections,
            "precheck_oracle_checked": self.precheck_oracle_checked,
            "precheck_oracle_agreed": self.precheck_oracle_agreed,
            "planted_isomorphic_trials": self.planted_isomorphic_trials,
            "witnesses_on_planted": self.witnesses_on_planted,
            "completeness_rate": rate,
            "counterexamples": [r.to_json_dict() for r in self.counterexamples],
            "mode_disagreements": [d.to_json_dict() for d in self.mode_disagreements],
        }


def _decide_with_mode(g: Graph, h: Graph, mode: str, cap: int, budget: int) -> Verdict:
    return decide(g, h, Options(mode=mode, cap=cap, retry_budget=budget))


def run_trials(
    n: int,
    trials: int,
    seed: int,
    mode: str = MODE_EXACT,
    edge_prob: float = 0.15,
    oracle_enabled: bool | None = None,
    cap: int = DEFAULT_CAP,
    retry_budget: int = DEFAULT_RETRY_BUDGET,
    deadline: float | None = None,
) -> FuzzReport:
    """Run a deterministic campaign; every failure becomes data, not an error."""
    if mode not in (MODE_EXACT, MODE_COMPRESSED, MODE_BOTH):
        raise ValueError(f"unknown mode {mode!r}")
    if oracle_enabled is None:
        oracle_enabled = n <= RECOMMENDED_MAX_N
    primary_mode = MODE_COMPRESSED if mode == MODE_COMPRESSED else MODE_EXACT
    report = FuzzReport(
        n=n, trials=0, seed=seed, edge_prob=edge_prob, mode=mode,
        oracle_enabled=oracle_enabled, cap=cap, retry_budget=retry_budget,
    )

    for index in range(trials):
        if deadline is not None and time.monotonic() > deadline:
            break
        rng = trial_rng(seed, index)
        base = planted_graph(n, edge_prob, rng)
        planted_iso = index % 2 == 0
        if planted_iso:
            other = random_relabeling(base, rng)
        else:
            other = random_relabeling(perturb_edges(base, rng), rng)
        report.trials += 1

        verdict = _decide_with_mode(base, other, primary_mode, cap, retry_budget)
        if mode == MODE_BOTH:
            secondary = _decide_with_mode(base, other, MODE_COMPRESSED, cap, retry_budget)
            if secondary.kind != verdict.kind:
                report.mode_disagreements.append(
                    ModeDisagreement(
                        index=index,
                        g_text=to_edge_list_text(base),
                        h_text=to_edge_list_text(other),
                        planted_isomorphic=planted_iso,
                        exact_kind=verdict.kind,
                        compressed_kind=secondary.kind,
                        cap=cap,
                        retry_budget=retry_budget,
                    )
                )

        def archive(category: str) -> None:
            report.counterexamples.append(
                CounterexampleRecord(
                    index=index,
                    category=category,
                    g_text=to_edge_list_text(base),
                    h_text=to_edge_list_text(other),
                    planted_isomorphic=planted_iso,
                    mode=primary_mode,
                    cap=cap,
                    retry_budget=retry_budget,
                    verdict_kind=verdict.kind,
                    reasons=verdict.reasons,
                    diagnostics=verdict.diagnostics.to_json_dict(),
                )
            )

        if verdict.kind == KIND_INFEASIBLE:
            report.infeasible_count += 1
            continue

        if planted_iso:
            report.planted_isomorphic_trials += 1

        if verdict.kind == KIND_WITNESS:
            if apply_permutation(other, verdict.witness) == base:
                report.sound_witnesses += 1
                report.agreements += 1
                if planted_iso:
                    report.witnesses_on_planted += 1
            else:
                archive("unsound_witness")
            continue

        # No witness found.
        if verdict.diagnostics.conclusive:
            # Pre-check rejection; confirm against the oracle when possible.
            if oracle_enabled:
                report.precheck_oracle_checked += 1
                if brute_force_isomorphism(base, other).witness is None:
                    report.precheck_oracle_agreed += 1
                    report.precheck_rejections += 1
                else:
                    archive("precheck_unsound")
            else:
                report.precheck_rejections += 1
            continue
        if planted_iso:
            archive("no_witness_on_isomorphic")
        elif oracle_enabled and brute_force_isomorphism(base, other).witness is not None:
            archive("no_witness_on_isomorphic")
        else:
            report.agreements += 1

    return report


def replay_record(record: CounterexampleRecord | dict) -> Verdict:
    """Re-run the decision stored in an archived record."""
    if isinstance(record, CounterexampleRecord):
        data = record.to_json_dict()
    else:
        data = record
    g = parse_edge_list(data["g"])
    h = parse_edge_list(data["h"])
    return decide(
        g, h,
        Options(mode=data["mode"], cap=data["cap"], retry_budget=data["retry_budget"]),
    )
