"""Pattern enumeration and the counting bounds, checked against naive brute force."""

from __future__ import annotations

import random
from math import comb, factorial

import pytest

from krsfree import (
    Hypergraph,
    Matching,
    complete_bipartite,
    complete_multipartite,
    copy_count_upper_bound,
    copy_count_upper_bound_relaxed,
    count_copies,
    count_matchings,
    enumerate_copies,
    enumerate_matchings,
    extensions_of_matching,
    pattern_exponent,
)

from bruteforce import (
    brute_copies_unordered,
    brute_count_biclique_unordered,
    brute_count_kgraph_unordered,
    brute_count_matchings,
    brute_count_partite_copies,
)
from corpus import graph_corpus, kgraph_corpus, partite_corpus_small, random_graph


def k33_minus_edge() -> Hypergraph:
    g, _ = complete_bipartite(3, 3)
    return Hypergraph(2, g.n, g.edges - {(0, 3)})


class TestExponent:
    def test_values(self):
        assert pattern_exponent(2, 2) == 3
        assert pattern_exponent(2, 3) == 7
        assert pattern_exponent(3, 3) == 13
        assert pattern_exponent(4, 2) == 5

    def test_closed_form(self):
        for r in range(2, 6):
            for k in range(1, 5):
                assert pattern_exponent(r, k) == (r**k - 1) // (r - 1)

    def test_graph_case_is_r_plus_one(self):
        for r in range(1, 8):
            assert pattern_exponent(r, 2) == r + 1


class TestGraphCopies:
    def test_k22_is_a_single_copy(self):
        g, _ = complete_bipartite(2, 2)
        copies = list(enumerate_copies(g, 2))
        assert len(copies) == 1
        assert copies[0].vertices() == (0, 1, 2, 3)

    def test_k33_has_nine_copies(self):
        g, _ = complete_bipartite(3, 3)
        assert count_copies(g, 2) == 9

    def test_k24_has_six_copies(self):
        g, _ = complete_bipartite(2, 4)
        assert count_copies(g, 2) == 6

    def test_k33_minus_edge_has_five(self):
        assert count_copies(k33_minus_edge(), 2) == 5

    def test_empty_graph(self):
        g = Hypergraph(2, 6, frozenset())
        assert count_copies(g, 2) == 0

    def test_oversized_pattern_is_empty_not_error(self):
        g, _ = complete_bipartite(2, 2)
        assert count_copies(g, 3) == 0
        assert list(enumerate_copies(g, 3)) == []

    def test_canonical_form_min_first(self):
        g, _ = complete_bipartite(3, 3)
        for copy in enumerate_copies(g, 2):
            a, b = copy.parts
            assert a[0] < b[0]
            assert not set(a) & set(b)

    def test_no_duplicates(self):
        g, _ = complete_bipartite(3, 4)
        copies = list(enumerate_copies(g, 2))
        assert len(copies) == len(set(copies))

    def test_matches_brute_force_counts(self):
        for g in graph_corpus(80, max_n=9, seed=101):
            for r in (2, 3):
                assert count_copies(g, r) == brute_count_biclique_unordered(g, r)

    def test_matches_brute_force_copy_sets(self):
        for g in graph_corpus(25, max_n=8, seed=202):
            got = {c.parts for c in enumerate_copies(g, 2)}
            assert got == brute_copies_unordered(g, 2)


class TestPartiteCopies:
    def test_complete_tripartite_single_copy(self):
        g, spec = complete_multipartite([2, 2, 2])
        copies = list(enumerate_copies(g, 2, spec))
        assert len(copies) == 1
        assert copies[0].parts == ((0, 1), (2, 3), (4, 5))

    def test_complete_host_count_is_binomial_product(self):
        g, spec = complete_multipartite([3, 4, 3])
        assert count_copies(g, 2, spec) == comb(3, 2) * comb(4, 2) * comb(3, 2)

    def test_anchored_k33_count(self):
        g, spec = complete_bipartite(3, 3)
        # with the partition fixed there is no orientation freedom
        assert count_copies(g, 2, spec) == 9

    def test_matches_brute_force(self):
        for g, spec in partite_corpus_small(60, seed=303):
            assert count_copies(g, 2, spec) == brute_count_partite_copies(g, spec, 2)

    def test_parts_stay_inside_declared_parts(self):
        for g, spec in partite_corpus_small(15, seed=404):
            for copy in enumerate_copies(g, 2, spec):
                for part, upart in zip(copy.parts, spec.parts):
                    assert set(part) <= set(upart)


class TestKGraphCopies:
    def test_matches_brute_force(self):
        for g in kgraph_corpus(40, seed=505):
            assert count_copies(g, 2) == brute_count_kgraph_unordered(g, 2)

    def test_complete_host_unordered_vs_anchored(self):
        g, spec = complete_multipartite([2, 2, 2])
        # parts of distinct sizes can only embed one way; equal sizes still give
        # one unordered copy here because the host itself is the only copy
        assert count_copies(g, 2) == 1
        assert count_copies(g, 2, spec) == 1


class TestMatchings:
    def test_k22_perfect_matchings(self):
        g, _ = complete_bipartite(2, 2)
        assert count_matchings(g, 2) == 2

    def test_k33_permanent(self):
        g, _ = complete_bipartite(3, 3)
        assert count_matchings(g, 3) == 6

    def test_r_one_is_edge_count(self):
        for g in graph_corpus(20, seed=606):
            assert count_matchings(g, 1) == g.m

    def test_matches_brute_force(self):
        for g in graph_corpus(50, max_n=8, seed=707):
            for r in (2, 3):
                assert count_matchings(g, r) == brute_count_matchings(g, r)
        for g in kgraph_corpus(20, seed=808):
            assert count_matchings(g, 2) == brute_count_matchings(g, 2)

    def test_enumeration_agrees_with_count(self):
        g = random_graph(8, 0.5, random.Random(9))
        ms = list(enumerate_matchings(g, 2))
        assert len(ms) == count_matchings(g, 2)
        assert len(set(ms)) == len(ms)
        for mtch in ms:
            verts = mtch.vertices()
            assert len(verts) == len(set(verts))


class TestExtensions:
    def test_perfect_matching_of_k22_extends_once(self):
        g, _ = complete_bipartite(2, 2)
        mtch = Matching(frozenset({(0, 2), (1, 3)}))
        exts = extensions_of_matching(g, mtch, 2)
        assert len(exts) == 1
        assert exts[0].parts == ((0, 1), (2, 3))

    def test_matching_spanning_no_copy(self):
        g = Hypergraph.from_edges(2, 4, [(0, 1), (2, 3)])
        mtch = Matching(frozenset(g.edges))
        assert extensions_of_matching(g, mtch, 2) == []

    def test_rejects_invalid_matchings(self):
        g, _ = complete_bipartite(2, 2)
        with pytest.raises(ValueError, match="expected r"):
            extensions_of_matching(g, Matching(frozenset({(0, 2)})), 2)
        with pytest.raises(ValueError, match="not present"):
            extensions_of_matching(g, Matching(frozenset({(0, 1), (2, 3)})), 2)
        bad = Matching(frozenset({(0, 2), (0, 3)}))
        with pytest.raises(ValueError, match="disjoint"):
            extensions_of_matching(g, bad, 2)

    def test_cap_over_corpus(self):
        for g in graph_corpus(30, max_n=8, seed=909):
            for r in (2, 3):
                for mtch in enumerate_matchings(g, r):
                    assert len(extensions_of_matching(g, mtch, r)) <= 2**r

    def test_cap_for_kgraphs(self):
        for g in kgraph_corpus(15, seed=111):
            cap = factorial(g.k) ** 2
            for mtch in enumerate_matchings(g, 2):
                assert len(extensions_of_matching(g, mtch, 2)) <= cap

    def test_partite_extension_is_unique_when_present(self):
        g, spec = complete_multipartite([2, 2, 2])
        mtch = next(enumerate_matchings(g, 2))
        exts = extensions_of_matching(g, mtch, 2, spec)
        assert len(exts) == 1
        assert exts[0].parts == ((0, 1), (2, 3), (4, 5))


class TestCopiesContainMatchings:
    def test_every_copy_contains_a_transversal_matching(self):
        for g in graph_corpus(25, max_n=8, seed=222):
            for copy in enumerate_copies(g, 2):
                a, b = copy.parts
                m1 = (tuple(sorted((a[0], b[0]))), tuple(sorted((a[1], b[1]))))
                assert all(e in g.edges for e in m1)
                assert not set(m1[0]) & set(m1[1])


class TestBounds:
    def test_frozen_examples(self):
        assert copy_count_upper_bound(9, 2, 2) == 144
        assert copy_count_upper_bound_relaxed(9, 2) == 162
        assert copy_count_upper_bound(3, 2, 3) == 108

    def test_m_equals_r(self):
        for r in range(2, 6):
            assert copy_count_upper_bound(r, r, 2) == 2**r

    def test_chain_over_corpus(self):
        for g in graph_corpus(120, seed=333):
            for r in (2, 3):
                copies = count_copies(g, r)
                tight = copy_count_upper_bound(g.m, r, 2)
                assert copies <= tight
                if g.m >= r:
                    assert tight <= copy_count_upper_bound_relaxed(g.m, r)

    def test_kgraph_bound(self):
        for g in kgraph_corpus(25, seed=444):
            assert count_copies(g, 2) <= copy_count_upper_bound(g.m, 2, g.k)

    def test_matching_count_at_most_binomial(self):
        for g in graph_corpus(40, seed=555):
            for r in (2, 3):
                assert count_matchings(g, r) <= comb(g.m, r)
