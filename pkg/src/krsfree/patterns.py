"""Exact enumeration and counting of complete multipartite pattern copies and matchings.

The pattern with side r in a k-graph is the complete k-partite k-graph whose k
parts all have size r; its edges are the r^k transversals. For graphs (k = 2)
this is the r-by-r biclique.

Copy conventions:
  * no partition given, k = 2: copies are unordered pairs {A, B} of disjoint
    r-sets with every cross pair an edge, stored with min(A) < min(B);
  * no partition given, k >= 3: copies are unordered families of k disjoint
    r-sets with every transversal an edge, parts stored sorted by minimum;
  * partition given: part i of the copy must lie inside part i of the host.

All counts are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterator, Sequence

from .hypergraph import Edge, Hypergraph, PartitionSpec, require_partite


@dataclass(frozen=True)
class PatternCopy:
    """One embedded pattern copy: an ordered tuple of disjoint sorted vertex tuples."""

    parts: tuple[tuple[int, ...], ...]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for part in self.parts for v in part))

    def edge_set(self) -> frozenset[Edge]:
        """All transversal edges of the copy (one vertex per part)."""
        return frozenset(tuple(sorted(t)) for t in product(*self.parts))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset[Edge]

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for e in self.edges for v in e))


def pattern_exponent(r: int, k: int) -> int:
    """q = 1 + r + ... + r^(k-1), the edge-count exponent of the side-r pattern.

    Equals (r^k - 1)/(r - 1) for r >= 2 and reduces to q = r + 1 when k = 2.
    """
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    return sum(r**i for i in range(k))


def _adjacency_bits(g: Hypergraph) -> list[int]:
    """Adjacency rows as int bitmasks; k = 2 only."""
    adj = [0] * g.n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _bit_positions(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _iter_graph_unordered(g: Hypergraph, r: int) -> Iterator[PatternCopy]:
    # Intersect adjacency rows over an r-set A, then pick B inside the common
    # neighborhood restricted to vertices above min(A); that restriction is what
    # makes each unordered copy appear exactly once.
    adj = _adjacency_bits(g)
    for A in combinations(range(g.n), r):
        common = ~((1 << (A[0] + 1)) - 1)
        for a in A:
            common &= adj[a]
            if not common:
                break
        if common.bit_count() < r:
            continue
        members = _bit_positions(common)
        for B in combinations(members, r):
            yield PatternCopy((A, B))


def _count_graph_unordered(g: Hypergraph, r: int) -> int:
    adj = _adjacency_bits(g)
    total = 0
    for A in combinations(range(g.n), r):
        common = ~((1 << (A[0] + 1)) - 1)
        for a in A:
            common &= adj[a]
            if not common:
                break
        total += comb(common.bit_count(), r)
    return total


def _singleton_vertices(g: Hypergraph) -> list[int]:
    return sorted(e[0] for e in g.edges)


def _partite_prefix_masks(
    g: Hypergraph, spec: PartitionSpec
) -> tuple[dict[tuple[int, ...], int], tuple[int, ...]]:
    """Map each (k-1)-prefix transversal to the bitmask of last-part completions."""
    pmap = spec.part_index()
    last = spec.parts[-1]
    pos = {v: i for i, v in enumerate(last)}
    masks: dict[tuple[int, ...], int] = {}
    k = g.k
    for e in g.edges:
        ordered: list[int] = [0] * k
        for v in e:
            ordered[pmap[v]] = v
        prefix = tuple(ordered[:-1])
        masks[prefix] = masks.get(prefix, 0) | (1 << pos[ordered[-1]])
    return masks, last


def _iter_partite_common(
    g: Hypergraph, spec: PartitionSpec, r: int
) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
    """Yield (S, D-mask) for every choice S of r-sets in the first k-1 parts.

    D is the set of last-part vertices completing every transversal of S to an
    edge; the mask is over positions in the last part.
    """
    masks, _last = _partite_prefix_masks(g, spec)
    choices = [combinations(part, r) for part in spec.parts[:-1]]
    for S in product(*choices):
        common = -1
        for prefix in product(*S):
            common &= masks.get(prefix, 0)
            if not common:
                break
        yield S, common


def _iter_partite(g: Hypergraph, spec: PartitionSpec, r: int) -> Iterator[PatternCopy]:
    if g.k == 1:
        for A in combinations(_singleton_vertices(g), r):
            yield PatternCopy((A,))
        return
    if any(len(part) < r for part in spec.parts):
        return
    last = spec.parts[-1]
    for S, common in _iter_partite_common(g, spec, r):
        if common.bit_count() < r:
            continue
        members = [last[i] for i in _bit_positions(common)]
        for B in combinations(members, r):
            yield PatternCopy(S + (B,))


def _count_partite(g: Hypergraph, spec: PartitionSpec, r: int) -> int:
    if g.k == 1:
        return comb(len(_singleton_vertices(g)), r)
    if any(len(part) < r for part in spec.parts):
        return 0
    return sum(comb(common.bit_count(), r) for _S, common in _iter_partite_common(g, spec, r))


def enumerate_matchings(g: Hypergraph, r: int) -> Iterator[Matching]:
    """All r-edge matchings, in lexicographic order of their sorted edge lists."""
    if r < 1:
        raise ValueError("matching size r must be >= 1")
    edges = g.sorted_edges()
    masks = [sum(1 << v for v in e) for e in edges]
    total = len(edges)

    def rec(start: int, used: int, chosen: list[Edge]) -> Iterator[Matching]:
        if len(chosen) == r:
            yield Matching(frozenset(chosen))
            return
        need = r - len(chosen)
        for i in range(start, total - need + 1):
            if masks[i] & used:
                continue
            chosen.append(edges[i])
            yield from rec(i + 1, used | masks[i], chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def count_matchings(g: Hypergraph, r: int) -> int:
    """Number of r-edge matchings, without materializing them."""
    if r < 1:
        raise ValueError("matching size r must be >= 1")
    edges = g.sorted_edges()
    masks = [sum(1 << v for v in e) for e in edges]
    total = len(edges)

    def rec(start: int, used: int, need: int) -> int:
        if need == 0:
            return 1
        acc = 0
        for i in range(start, total - need + 1):
            if not masks[i] & used:
                acc += rec(i + 1, used | masks[i], need - 1)
        return acc

    return rec(0, 0, r)


def _canonical_unordered(parts: Sequence[Sequence[int]]) -> PatternCopy:
    tuples = [tuple(sorted(p)) for p in parts]
    tuples.sort(key=lambda t: t[0])
    return PatternCopy(tuple(tuples))


def extensions_of_matching(
    g: Hypergraph, matching: Matching, r: int, spec: PartitionSpec | None = None
) -> list[PatternCopy]:
    """All pattern copies whose vertex set is exactly the matching's vertex set.

    Each matching edge must be a transversal of the copy. The list has at most
    2^r entries for graphs and at most (k!)^r in general.
    """
    edges = sorted(matching.edges)
    if len(edges) != r:
        raise ValueError(f"matching has {len(edges)} edges, expected r={r}")
    if not matching.edges <= g.edges:
        raise ValueError("matching contains edges not present in the hypergraph")
    seen: set[int] = set()
    for e in edges:
        if seen.intersection(e):
            raise ValueError("matching edges are not pairwise disjoint")
        seen.update(e)
    k = g.k

    if spec is not None:
        require_partite(g, spec)
        pmap = spec.part_index()
        parts: list[list[int]] = [[] for _ in range(k)]
        for e in edges:
            for v in e:
                parts[pmap[v]].append(v)
        copy = PatternCopy(tuple(tuple(sorted(p)) for p in parts))
        if all(e in g.edges for e in copy.edge_set()):
            return [copy]
        return []

    if k == 1:
        return [PatternCopy((tuple(v for (v,) in edges),))]

    # Without a partition: assign each edge's k vertices bijectively to the k
    # parts. Pinning the first edge to the identity assignment picks one
    # representative per unordered copy.
    base = edges[0]
    results = []
    for assignment in product(permutations(range(k)), repeat=r - 1):
        parts = [[base[i]] for i in range(k)]
        for j, perm in enumerate(assignment, start=1):
            for pos, v in enumerate(edges[j]):
                parts[perm[pos]].append(v)
        candidate = _canonical_unordered(parts)
        if all(e in g.edges for e in candidate.edge_set()):
            results.append(candidate)
    return results


def _iter_kgraph_unordered(g: Hypergraph, r: int) -> Iterator[PatternCopy]:
    # Every copy contains a perfect matching of r disjoint transversals, so
    # extending every r-matching finds every copy; de-duplicate across matchings.
    seen: set[PatternCopy] = set()
    for matching in enumerate_matchings(g, r):
        for copy in extensions_of_matching(g, matching, r):
            if copy not in seen:
                seen.add(copy)
                yield copy


def enumerate_copies(
    g: Hypergraph, r: int, spec: PartitionSpec | None = None
) -> Iterator[PatternCopy]:
    """All copies of the side-r pattern in g, under the module's copy conventions.

    An oversized pattern (r * k > n) yields nothing rather than raising.
    """
    if r < 1:
        raise ValueError("pattern side r must be >= 1")
    if r * g.k > g.n:
        return iter(())
    if spec is not None:
        require_partite(g, spec)
        return _iter_partite(g, spec, r)
    if g.k == 1:
        return _iter_partite(g, PartitionSpec((tuple(range(g.n)),)), r)
    if g.k == 2:
        return _iter_graph_unordered(g, r)
    return _iter_kgraph_unordered(g, r)


def count_copies(g: Hypergraph, r: int, spec: PartitionSpec | None = None) -> int:
    """Number of copies of the side-r pattern, equal to the enumeration's length."""
    if r < 1:
        raise ValueError("pattern side r must be >= 1")
    if r * g.k > g.n:
        return 0
    if spec is not None:
        require_partite(g, spec)
        return _count_partite(g, spec, r)
    if g.k == 1:
        return comb(len(_singleton_vertices(g)), r)
    if g.k == 2:
        return _count_graph_unordered(g, r)
    return sum(1 for _ in _iter_kgraph_unordered(g, r))


def copy_count_upper_bound(m: int, r: int, k: int) -> int:
    """(k!)^r * C(m, r): every copy contains an r-matching, each r-matching extends
    to at most (k!)^r copies, and there are at most C(m, r) r-matchings."""
    if m < 0 or r < 1 or k < 1:
        raise ValueError("need m >= 0, r >= 1, k >= 1")
    return factorial(k) ** r * comb(m, r)


def copy_count_upper_bound_relaxed(m: int, r: int) -> int:
    """The weaker graph-case form 2 * m^r, dominating 2^r * C(m, r) for m >= r."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0, r >= 1")
    return 2 * m**r
