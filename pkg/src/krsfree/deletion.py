"""Sparsify-then-delete extraction of pattern-free subgraphs, plus the closed-form bounds.

The extraction keeps each edge with probability p = (1/2) * m^(-1/q), where
q = 1 + r + ... + r^(k-1), enumerates the pattern copies that survived, and
deletes one edge from every copy that is still fully present. The expected
final size is at least (1/4) * m^((q-1)/q).

Randomness contract: each run is a pure function of (graph, r, seed, policy).
Trial i of a batch uses derive_trial_seed(base_seed, i). The bit generator is
recorded in every report (see hypergraph.GENERATOR_ID).
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from .hypergraph import (
    GENERATOR_ID,
    EdgeSubset,
    Hypergraph,
    PartitionSpec,
    _sample_with_rng,
)
from .patterns import count_copies, enumerate_copies, pattern_exponent

EDGE_CHOICE_POLICIES = ("lex", "random", "greedy")

REPORT_CSV_COLUMNS = (
    "trial",
    "seed",
    "p",
    "edges_sampled",
    "copies_found",
    "edges_deleted",
    "final_size",
    "freeness_verified",
    "generator",
    "policy",
)


@dataclass(frozen=True)
class DeletionParams:
    """Derived run parameters for a host with m edges and the side-r pattern in a k-graph."""

    m: int
    r: int
    k: int
    q: int
    p: float
    guarantee: float


def deletion_params(m: int, r: int, k: int) -> DeletionParams:
    """p = (1/2) * m^(-1/q) and the guaranteed expected size (1/4) * m^((q-1)/q)."""
    if m < 1:
        raise ValueError("need m >= 1 edges")
    if r < 2 or k < 2:
        raise ValueError("need r >= 2 and k >= 2")
    q = pattern_exponent(r, k)
    p = 0.5 * m ** (-1.0 / q)
    guarantee = 0.25 * m ** ((q - 1) / q)
    return DeletionParams(m=m, r=r, k=k, q=q, p=p, guarantee=guarantee)


@dataclass(frozen=True)
class DeletionRunReport:
    """What one extraction run did, sufficient to reproduce it exactly."""

    seed: int
    p: float
    edges_sampled: int
    copies_found: int
    edges_deleted: int
    final_size: int
    freeness_verified: bool
    generator: str
    policy: str
    vacuous_regime: bool  # m < 2^q: the expectation bound is too small to test statistically


@dataclass(frozen=True)
class TrialSummary:
    """Aggregates over a seeded batch of extraction runs, in trial-index order."""

    m: int
    r: int
    k: int
    q: int
    p: float
    policy: str
    generator: str
    num_trials: int
    base_seed: int
    guarantee: float
    mean_final_size: float
    min_final_size: int
    max_final_size: int
    mean_copies_found: float
    fraction_meeting_guarantee: float
    max_meets_guarantee: bool  # integer max compared against ceil(guarantee)
    vacuous_regime: bool
    reports: tuple[DeletionRunReport, ...]


def derive_trial_seed(base_seed: int, index: int) -> int:
    """Trial seed rule: first 64-bit word of SeedSequence([base_seed, index])."""
    if base_seed < 0 or index < 0:
        raise ValueError("base_seed and index must be non-negative")
    ss = np.random.SeedSequence([int(base_seed), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def extract_free_subgraph(
    g: Hypergraph,
    r: int,
    seed: int,
    spec: PartitionSpec | None = None,
    edge_choice: str = "lex",
    p: float | None = None,
) -> tuple[EdgeSubset, DeletionRunReport]:
    """One seeded run of the sparsify-then-delete extraction.

    Policies for which edge of a still-present copy gets deleted:
      * "lex": the lexicographically smallest edge of the copy (default);
      * "random": a seeded-uniform edge of the copy, drawn from the same
        generator that produced the sample;
      * "greedy": the copy edge lying in the most still-present copies,
        ties broken lexicographically.

    The returned subgraph contains no copy of the pattern; the report records
    the verification.
    """
    if r < 2:
        raise ValueError("pattern side r must be >= 2")
    if edge_choice not in EDGE_CHOICE_POLICIES:
        raise ValueError(f"unknown edge choice policy {edge_choice!r}")
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    m = g.m
    q = pattern_exponent(r, g.k)
    if p is None:
        p_used = deletion_params(m, r, g.k).p if m >= 1 else 0.0
    else:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"retention probability p={p} outside [0, 1]")
        p_used = float(p)

    rng = np.random.Generator(np.random.PCG64(seed))
    sample = _sample_with_rng(g, p_used, rng)
    sub = sample.as_hypergraph()
    copies = [sorted(c.edge_set()) for c in enumerate_copies(sub, r, spec)]

    deleted: set = set()
    if edge_choice == "greedy":
        edge_to_copies: dict = {}
        for idx, cedges in enumerate(copies):
            for e in cedges:
                edge_to_copies.setdefault(e, []).append(idx)
        alive = [True] * len(copies)
        live_count = {e: len(ids) for e, ids in edge_to_copies.items()}
        for idx, cedges in enumerate(copies):
            if not alive[idx]:
                continue
            victim = min(cedges, key=lambda e: (-live_count[e], e))
            deleted.add(victim)
            for j in edge_to_copies[victim]:
                if alive[j]:
                    alive[j] = False
                    for e in copies[j]:
                        live_count[e] -= 1
    else:
        for cedges in copies:
            if any(e in deleted for e in cedges):
                continue
            if edge_choice == "lex":
                victim = cedges[0]
            else:
                victim = cedges[int(rng.integers(len(cedges)))]
            deleted.add(victim)

    final_edges = frozenset(sample.edges - deleted)
    free = count_copies(Hypergraph(g.k, g.n, final_edges), r, spec) == 0
    report = DeletionRunReport(
        seed=seed,
        p=p_used,
        edges_sampled=sample.m,
        copies_found=len(copies),
        edges_deleted=len(deleted),
        final_size=len(final_edges),
        freeness_verified=free,
        generator=GENERATOR_ID,
        policy=edge_choice,
        vacuous_regime=m < 2**q,
    )
    return EdgeSubset(g, final_edges), report


def run_trials(
    g: Hypergraph,
    r: int,
    num_trials: int,
    base_seed: int,
    spec: PartitionSpec | None = None,
    edge_choice: str = "lex",
    p: float | None = None,
    workers: int = 1,
) -> TrialSummary:
    """Run num_trials seeded extractions; aggregation order is fixed by trial index.

    Trials are independent given their derived seeds, so workers > 1 may run
    them concurrently without changing any output.
    """
    if num_trials < 1:
        raise ValueError("need num_trials >= 1")
    seeds = [derive_trial_seed(base_seed, i) for i in range(num_trials)]

    def one(seed: int) -> DeletionRunReport:
        return extract_free_subgraph(g, r, seed, spec, edge_choice, p)[1]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = tuple(pool.map(one, seeds))
    else:
        reports = tuple(one(s) for s in seeds)

    m = g.m
    q = pattern_exponent(r, g.k)
    if m >= 1:
        params = deletion_params(m, r, g.k)
        guarantee = params.guarantee
        p_used = params.p if p is None else float(p)
    else:
        guarantee = 0.0
        p_used = 0.0 if p is None else float(p)
    finals = [rep.final_size for rep in reports]
    mean_final = sum(finals) / num_trials
    mean_copies = sum(rep.copies_found for rep in reports) / num_trials
    meeting = sum(1 for f in finals if f >= guarantee - 1e-9)
    return TrialSummary(
        m=m,
        r=r,
        k=g.k,
        q=q,
        p=p_used,
        policy=edge_choice,
        generator=GENERATOR_ID,
        num_trials=num_trials,
        base_seed=base_seed,
        guarantee=guarantee,
        mean_final_size=mean_final,
        min_final_size=min(finals),
        max_final_size=max(finals),
        mean_copies_found=mean_copies,
        fraction_meeting_guarantee=meeting / num_trials,
        max_meets_guarantee=max(finals) >= math.ceil(guarantee - 1e-9),
        vacuous_regime=m < 2**q,
        reports=reports,
    )


@dataclass(frozen=True)
class ExpectationBound:
    """Closed-form expected-size lower bound at the standard p.

    value:          p*m - (k!)^r * p^(r^k) * C(m, r)
    relaxed_value:  p*m - 2 * p^(r^2) * m^r     (graphs only, else None)
    floor:          (1/4) * m^((q-1)/q), which value must dominate
    """

    m: int
    r: int
    k: int
    q: int
    p: float
    value: float
    relaxed_value: float | None
    floor: float


def expectation_lower_bound(m: int, r: int, k: int) -> ExpectationBound:
    """Evaluate the expected-size bound exactly at p = (1/2) * m^(-1/q)."""
    params = deletion_params(m, r, k)
    p, q = params.p, params.q
    value = p * m - factorial(k) ** r * p ** (r**k) * comb(m, r)
    relaxed = p * m - 2.0 * p ** (r * r) * float(m) ** r if k == 2 else None
    return ExpectationBound(
        m=m, r=r, k=k, q=q, p=p, value=value, relaxed_value=relaxed, floor=params.guarantee
    )


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def reports_to_csv(reports: tuple[DeletionRunReport, ...] | list[DeletionRunReport]) -> str:
    """One CSV row per trial, columns REPORT_CSV_COLUMNS, LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_CSV_COLUMNS)
    for i, rep in enumerate(reports):
        writer.writerow(
            [
                i,
                rep.seed,
                _fmt_float(rep.p),
                rep.edges_sampled,
                rep.copies_found,
                rep.edges_deleted,
                rep.final_size,
                str(rep.freeness_verified).lower(),
                rep.generator,
                rep.policy,
            ]
        )
    return buf.getvalue()


def report_to_json_dict(report: DeletionRunReport) -> dict:
    return {
        "schema": "v1",
        "seed": report.seed,
        "p": float(_fmt_float(report.p)),
        "edges_sampled": report.edges_sampled,
        "copies_found": report.copies_found,
        "edges_deleted": report.edges_deleted,
        "final_size": report.final_size,
        "freeness_verified": report.freeness_verified,
        "generator": report.generator,
        "policy": report.policy,
        "vacuous_regime": report.vacuous_regime,
    }


def summary_to_json_dict(summary: TrialSummary) -> dict:
    return {
        "schema": "v1",
        "m": summary.m,
        "r": summary.r,
        "k": summary.k,
        "q": summary.q,
        "p": float(_fmt_float(summary.p)),
        "policy": summary.policy,
        "generator": summary.generator,
        "num_trials": summary.num_trials,
        "base_seed": summary.base_seed,
        "guarantee": float(_fmt_float(summary.guarantee)),
        "mean_final_size": float(_fmt_float(summary.mean_final_size)),
        "min_final_size": summary.min_final_size,
        "max_final_size": summary.max_final_size,
        "mean_copies_found": float(_fmt_float(summary.mean_copies_found)),
        "fraction_meeting_guarantee": float(_fmt_float(summary.fraction_meeting_guarantee)),
        "max_meets_guarantee": summary.max_meets_guarantee,
        "vacuous_regime": summary.vacuous_regime,
        "reports": [
            {k: v for k, v in report_to_json_dict(rep).items() if k != "schema"}
            for rep in summary.reports
        ],
    }


def summary_to_json(summary: TrialSummary) -> str:
    return json.dumps(summary_to_json_dict(summary), indent=2, sort_keys=True) + "\n"
