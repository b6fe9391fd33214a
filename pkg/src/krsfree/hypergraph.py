"""k-uniform hypergraphs on dense integer vertices, partitions, and seeded edge sampling.

Vertices are 0..n-1. Edges are k-element sorted tuples with set semantics.
Everything here is immutable, hashable where it matters, and deterministic:
functions that need randomness take an integer seed and use a named generator
(see GENERATOR_ID) so byte-identical reruns are possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, ...]

# Identifier of the pseudorandom bit generator recorded in every run report.
GENERATOR_ID = "numpy-pcg64"


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph: uniformity k >= 1, n >= 0 vertices, edges as sorted k-tuples."""

    k: int
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("uniformity k must be >= 1")
        if self.n < 0:
            raise ValueError("vertex count n must be >= 0")
        for e in self.edges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"edge {e!r} must have exactly {self.k} distinct vertices")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge {e!r} is not sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e!r} has vertices outside [0, {self.n})")

    @classmethod
    def from_edges(cls, k: int, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Build a hypergraph, sorting each edge and collapsing duplicates."""
        normalized = frozenset(tuple(sorted(e)) for e in edges)
        return cls(k, n, normalized)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class PartitionSpec:
    """An ordered vertex partition; parts are sorted tuples, pairwise disjoint."""

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if tuple(sorted(part)) != part or len(set(part)) != len(part):
                raise ValueError(f"part {part!r} is not a sorted set of vertices")
            if seen.intersection(part):
                raise ValueError("parts are not pairwise disjoint")
            seen.update(part)

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]]) -> "PartitionSpec":
        return cls(tuple(tuple(sorted(p)) for p in parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    def part_index(self) -> dict[int, int]:
        """Map each vertex to the index of the part containing it."""
        return {v: i for i, part in enumerate(self.parts) for v in part}


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of a host's edges, keeping the reference to the host."""

    host: Hypergraph
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if not self.edges <= self.host.edges:
            raise ValueError("subset contains edges not present in the host")

    @property
    def m(self) -> int:
        return len(self.edges)

    def as_hypergraph(self) -> Hypergraph:
        """The subset as a standalone hypergraph on the host's vertex set."""
        return Hypergraph(self.host.k, self.host.n, self.edges)


def is_partite(g: Hypergraph, spec: PartitionSpec) -> bool:
    """True iff spec has g.k parts covering [0, n) and every edge meets each part once."""
    if spec.k != g.k:
        return False
    covered = [v for part in spec.parts for v in part]
    if len(covered) != g.n or set(covered) != set(range(g.n)):
        return False
    pmap = spec.part_index()
    expect = list(range(g.k))
    for e in g.edges:
        if sorted(pmap[v] for v in e) != expect:
            return False
    return True


def require_partite(g: Hypergraph, spec: PartitionSpec) -> None:
    if not is_partite(g, spec):
        raise ValueError("hypergraph is not partite with respect to the given partition")


def complete_bipartite(n_u: int, n_w: int) -> tuple[Hypergraph, PartitionSpec]:
    """Complete bipartite graph on parts {0..n_u-1} and {n_u..n_u+n_w-1}."""
    if n_u < 0 or n_w < 0:
        raise ValueError("part sizes must be >= 0")
    edges = frozenset((u, n_u + w) for u in range(n_u) for w in range(n_w))
    g = Hypergraph(2, n_u + n_w, edges)
    spec = PartitionSpec((tuple(range(n_u)), tuple(range(n_u, n_u + n_w))))
    return g, spec


def complete_multipartite(sizes: Sequence[int]) -> tuple[Hypergraph, PartitionSpec]:
    """Complete k-partite k-graph with consecutive parts of the given sizes.

    Edges are all transversals (one vertex per part); m is the product of the sizes.
    """
    if len(sizes) < 1:
        raise ValueError("need at least one part")
    if any(s < 0 for s in sizes):
        raise ValueError("part sizes must be >= 0")
    parts = []
    offset = 0
    for s in sizes:
        parts.append(tuple(range(offset, offset + s)))
        offset += s
    edges = frozenset(tuple(sorted(t)) for t in product(*parts))
    g = Hypergraph(len(sizes), offset, edges)
    return g, PartitionSpec(tuple(parts))


def link(g: Hypergraph, spec: PartitionSpec, x: int) -> tuple[Hypergraph, PartitionSpec]:
    """Link of a last-part vertex x: the (k-1)-graph of sets S with S + {x} an edge.

    Vertices of the link are the first k-1 parts, re-labelled densely by sorted
    order (the identity for builder-produced hosts). Returns the link and the
    induced partition of its vertex set.
    """
    require_partite(g, spec)
    if g.k < 2:
        raise ValueError("link requires uniformity k >= 2")
    if x not in spec.parts[-1]:
        raise ValueError(f"vertex {x} is not in the last part")
    kept = sorted(v for part in spec.parts[:-1] for v in part)
    relabel = {v: i for i, v in enumerate(kept)}
    new_edges = frozenset(
        tuple(sorted(relabel[v] for v in e if v != x)) for e in g.edges if x in e
    )
    link_g = Hypergraph(g.k - 1, len(kept), new_edges)
    link_spec = PartitionSpec(
        tuple(tuple(sorted(relabel[v] for v in part)) for part in spec.parts[:-1])
    )
    return link_g, link_spec


def _sample_with_rng(g: Hypergraph, p: float, rng: np.random.Generator) -> EdgeSubset:
    """Keep each edge independently with probability p, consuming one uniform per edge.

    Draws happen in sorted edge order, which is what makes the sample a pure
    function of (g, p, generator state).
    """
    order = g.sorted_edges()
    if not order:
        return EdgeSubset(g, frozenset())
    draws = rng.random(len(order))
    chosen = frozenset(e for e, d in zip(order, draws) if d < p)
    return EdgeSubset(g, chosen)


def bernoulli_edge_sample(g: Hypergraph, p: float, seed: int) -> EdgeSubset:
    """Deterministic Bernoulli(p) edge sample: same (g, p, seed) gives the same subset."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"retention probability p={p} outside [0, 1]")
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    rng = np.random.Generator(np.random.PCG64(seed))
    return _sample_with_rng(g, p, rng)


def hypergraph_to_text(g: Hypergraph) -> str:
    """Serialize: first line "k n m", then m lines of k space-separated vertices."""
    lines = [f"{g.k} {g.n} {g.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in g.sorted_edges())
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    """Parse the text format written by hypergraph_to_text. Raises ValueError on malformed input."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty hypergraph file")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError(f"header must be 'k n m', got {lines[0]!r}")
    try:
        k, n, m = (int(t) for t in header)
    except ValueError as exc:
        raise ValueError(f"non-integer header field in {lines[0]!r}") from exc
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise ValueError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    for ln in body:
        try:
            vertices = [int(t) for t in ln.split()]
        except ValueError as exc:
            raise ValueError(f"non-integer vertex in edge line {ln!r}") from exc
        if len(vertices) != k:
            raise ValueError(f"edge line {ln!r} does not have {k} vertices")
        edges.append(vertices)
    return Hypergraph.from_edges(k, n, edges)


def partition_to_text(spec: PartitionSpec) -> str:
    """Serialize a partition: k lines, each a space-separated vertex list (possibly empty)."""
    return "\n".join(" ".join(str(v) for v in part) for part in spec.parts) + "\n"


def partition_from_text(text: str) -> PartitionSpec:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    if not lines:
        raise ValueError("empty partition file")
    parts = []
    for ln in lines:
        try:
            parts.append(tuple(int(t) for t in ln.split()))
        except ValueError as exc:
            raise ValueError(f"non-integer vertex in partition line {ln!r}") from exc
    return PartitionSpec.from_parts(parts)


def write_hypergraph(g: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(hypergraph_to_text(g))


def read_hypergraph(path: str) -> Hypergraph:
    with open(path, "r", encoding="ascii") as fh:
        return hypergraph_from_text(fh.read())


def write_partition(spec: PartitionSpec, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(partition_to_text(spec))


def read_partition(path: str) -> PartitionSpec:
    with open(path, "r", encoding="ascii") as fh:
        return partition_from_text(fh.read())
