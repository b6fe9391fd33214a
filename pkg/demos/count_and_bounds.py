#!/usr/bin/env python3
"""
Count pattern copies and matchings on small hosts and check the counting chain.

Every r-by-r biclique copy contains an r-matching, each r-matching extends to
at most 2^r copies (graphs) or (k!)^r copies (k-graphs), and a graph with m
edges has at most C(m, r) such matchings. Chaining these gives

    copies <= 2^r * C(m, r) <= 2 * m^r        (m >= r)

and the script prints each quantity so the chain is visible on real numbers.
"""

from math import comb

from krsfree import (
    Hypergraph,
    complete_bipartite,
    complete_multipartite,
    copy_count_upper_bound,
    copy_count_upper_bound_relaxed,
    count_copies,
    count_matchings,
    enumerate_matchings,
    extensions_of_matching,
)

r = 2

print("host            m  copies  matchings  2^r*C(m,r)  2*m^r")
for name, g in [
    ("K_{2,2}", complete_bipartite(2, 2)[0]),
    ("K_{2,4}", complete_bipartite(2, 4)[0]),
    ("K_{3,3}", complete_bipartite(3, 3)[0]),
    ("K_{4,4}", complete_bipartite(4, 4)[0]),
]:
    copies = count_copies(g, r)
    matchings = count_matchings(g, r)
    tight = copy_count_upper_bound(g.m, r, 2)
    relaxed = copy_count_upper_bound_relaxed(g.m, r)
    assert copies <= tight <= relaxed
    assert matchings <= comb(g.m, r)
    print(f"{name:12} {g.m:4}  {copies:6}  {matchings:9}  {tight:10}  {relaxed}")

# Removing one edge from K_{3,3} kills the 4 copies through it: 9 -> 5.
g33, _ = complete_bipartite(3, 3)
dented = Hypergraph(2, g33.n, g33.edges - {(0, 3)})
print(f"\nK_(3,3) minus one edge: {count_copies(dented, r)} copies (was 9)")

# Extension counts in the flesh: each 2-matching of K_{3,3} spans either one
# copy or none, so the 2^r = 4 cap is far from tight here.
sizes = [len(extensions_of_matching(g33, mg, r)) for mg in enumerate_matchings(g33, r)]
print(f"K_(3,3) 2-matchings: {len(sizes)}, extension counts: {sorted(set(sizes))}, cap {2**r}")

# The same bound with the k-uniform pattern on a 3-graph.
g3, spec3 = complete_multipartite([2, 2, 2])
print(f"\ncomplete 3-partite (2,2,2): m={g3.m}")
print(f"  side-2 pattern copies: {count_copies(g3, 2, spec3)}")
print(f"  (k!)^r * C(m,r) bound: {copy_count_upper_bound(g3.m, 2, 3)}")
