import random

import pytest

from bibrank.authors import (
    CoauthorGraph,
    betweenness,
    build_coauthor_graph,
    recommend_authors,
    rerank_centrality,
)
from bibrank.errors import RerankMismatchError
from bibrank.index import Query, ResultSet

import oracles
from conftest import corpus_from_dicts


def result_of(entries):
    return ResultSet(
        entries=list(entries), strategy="tfidf", query=Query(free_terms=("x",))
    )


def author_corpus(author_lists):
    return corpus_from_dicts(
        [
            {"id": f"p{i + 1}", "title": "doc", "authors": authors}
            for i, authors in enumerate(author_lists)
        ]
    )


def full_result(corpus):
    return result_of([(r.id, float(len(corpus) - i)) for i, r in enumerate(corpus)])


class TestBuildGraph:
    def test_pair_yields_one_edge(self):
        corpus = author_corpus([["Xu, Li", "Yang, Mei"]])
        graph = build_coauthor_graph(corpus, full_result(corpus))
        assert graph.nodes == ["xu, li", "yang, mei"]
        assert graph.edges() == {("xu, li", "yang, mei")}

    def test_single_author_is_isolated_node(self):
        corpus = author_corpus([["Xu, Li"]])
        graph = build_coauthor_graph(corpus, full_result(corpus))
        assert graph.nodes == ["xu, li"]
        assert graph.edges() == set()

    def test_repeated_coauthorship_still_one_edge(self):
        corpus = author_corpus(
            [["Xu, Li", "Yang, Mei"], ["Xu, Li", "Yang, Mei"]]
        )
        graph = build_coauthor_graph(corpus, full_result(corpus))
        assert len(graph.edges()) == 1

    def test_all_pairs_of_a_paper_connected(self):
        corpus = author_corpus([["A, A", "B, B", "C, C"]])
        graph = build_coauthor_graph(corpus, full_result(corpus))
        assert graph.edges() == {
            ("a, a", "b, b"),
            ("a, a", "c, c"),
            ("b, b", "c, c"),
        }

    def test_case_variants_merge_into_one_node(self):
        corpus = author_corpus([["XU, LI"], ["Xu,  Li"]])
        graph = build_coauthor_graph(corpus, full_result(corpus))
        assert graph.nodes == ["xu, li"]

    def test_build_is_order_insensitive(self):
        corpus = author_corpus(
            [["Xu, Li", "Yang, Mei"], ["Yang, Mei", "Zhou, Kun"], ["Zhou, Kun"]]
        )
        forward = full_result(corpus)
        backward = result_of(list(reversed(forward.entries)))
        graph_a = build_coauthor_graph(corpus, forward)
        graph_b = build_coauthor_graph(corpus, backward)
        assert graph_a.adjacency == graph_b.adjacency
        assert graph_a.display == graph_b.display


class TestBetweenness:
    def test_path_graph_center(self):
        graph = CoauthorGraph.from_edges(
            ["x", "y", "z"], [("x", "y"), ("y", "z")]
        )
        scores = betweenness(graph).score
        assert scores["y"] == pytest.approx(1.0, abs=1e-9)
        assert scores["x"] == pytest.approx(0.0, abs=1e-9)
        assert scores["z"] == pytest.approx(0.0, abs=1e-9)

    def test_star_center(self):
        graph = CoauthorGraph.from_edges(
            ["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")]
        )
        scores = betweenness(graph).score
        assert scores["c"] == pytest.approx(1.0, abs=1e-9)
        for leaf in ("l1", "l2", "l3"):
            assert scores[leaf] == pytest.approx(0.0, abs=1e-9)

    def test_four_cycle(self):
        graph = CoauthorGraph.from_edges(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
        )
        scores = betweenness(graph).score
        for node in "abcd":
            assert scores[node] == pytest.approx(1 / 6, abs=1e-9)

    def test_tiny_graphs_score_zero(self):
        for nodes, edges in ([[], []], [["a"], []], [["a", "b"], [("a", "b")]]):
            graph = CoauthorGraph.from_edges(nodes, edges)
            assert all(v == 0.0 for v in betweenness(graph).score.values())

    def test_isolated_nodes_score_zero(self):
        graph = CoauthorGraph.from_edges(
            ["x", "y", "z", "lonely"], [("x", "y"), ("y", "z")]
        )
        scores = betweenness(graph).score
        assert scores["lonely"] == 0.0
        # normalization uses the whole graph's node count (n=4 -> divisor 3)
        assert scores["y"] == pytest.approx(1 / 3, abs=1e-9)

    def test_matches_bruteforce_on_handful_of_graphs(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randint(3, 9)
            nodes = [f"n{i}" for i in range(n)]
            edges = [
                (u, v)
                for i, u in enumerate(nodes)
                for v in nodes[i + 1 :]
                if rng.random() < 0.4
            ]
            graph = CoauthorGraph.from_edges(nodes, edges)
            expected = oracles.brute_force_betweenness(graph.adjacency)
            actual = betweenness(graph).score
            for node in nodes:
                assert actual[node] == pytest.approx(expected[node], abs=1e-9)


class TestRecommendAuthors:
    def test_path_center_ranks_first(self):
        corpus = author_corpus(
            [["Xu, Li", "Yang, Mei"], ["Yang, Mei", "Zhou, Kun"]]
        )
        recs = recommend_authors(corpus, full_result(corpus), 3)
        assert recs[0].value == "Yang, Mei"
        assert recs[0].score == pytest.approx(1.0, abs=1e-9)
        assert recs[0].kind == "author"

    def test_all_zero_falls_back_to_doc_counts(self):
        corpus = author_corpus(
            [["Ahn, Sora"], ["Ahn, Sora"], ["Ahn, Sora"], ["Baek, Jin"]]
        )
        recs = recommend_authors(corpus, full_result(corpus), 2)
        assert [r.value for r in recs] == ["Ahn, Sora", "Baek, Jin"]
        assert all(r.score == 0.0 for r in recs)

    def test_k_exceeding_author_count(self):
        corpus = author_corpus([["Xu, Li", "Yang, Mei"]])
        recs = recommend_authors(corpus, full_result(corpus), 10)
        assert len(recs) == 2

    def test_no_authors_at_all(self):
        corpus = corpus_from_dicts([{"id": "p1", "title": "doc"}])
        assert recommend_authors(corpus, full_result(corpus), 5) == []

    def test_ties_break_on_display_name(self):
        corpus = author_corpus([["Beta, B"], ["Alpha, A"]])
        recs = recommend_authors(corpus, full_result(corpus), 2)
        assert [r.value for r in recs] == ["Alpha, A", "Beta, B"]

    def test_ranks_and_score_order(self):
        corpus = author_corpus(
            [
                ["Xu, Li", "Yang, Mei"],
                ["Yang, Mei", "Zhou, Kun"],
                ["Zhou, Kun", "Wei, Na"],
            ]
        )
        recs = recommend_authors(corpus, full_result(corpus), 4)
        assert [r.rank for r in recs] == list(range(1, len(recs) + 1))
        scores = [r.score for r in recs]
        assert scores == sorted(scores, reverse=True)


class TestRerankCentrality:
    def path_setup(self):
        # graph: Xu - Yang - Zhou (Yang central)
        docs = [
            {"id": "p1", "title": "d", "authors": ["Yang, Mei", "Xu, Li"]},
            {"id": "p2", "title": "d", "authors": ["Yang, Mei", "Zhou, Kun"]},
            {"id": "p3", "title": "d", "authors": ["Xu, Li"]},
            {"id": "p4", "title": "d", "authors": ["Zhou, Kun"]},
            {"id": "p5", "title": "d", "authors": []},
            {"id": "p6", "title": "d", "authors": ["Yang, Mei"]},
        ]
        corpus = corpus_from_dicts(docs)
        entries = [
            ("p5", 7.0),
            ("p3", 6.0),
            ("p1", 5.0),
            ("p2", 4.0),
            ("p4", 3.0),
            ("p6", 2.0),
        ]
        result = result_of(entries)
        scores = betweenness(build_coauthor_graph(corpus, result))
        return corpus, result, scores

    def test_shared_single_author_keeps_order(self):
        corpus = author_corpus([["Solo, Ann"], ["Solo, Ann"], ["Solo, Ann"]])
        result = result_of([("p1", 3.0), ("p2", 2.0), ("p3", 1.0)])
        scores = betweenness(build_coauthor_graph(corpus, result))
        reranked = rerank_centrality(corpus, result, scores)
        assert reranked.entries == result.entries
        assert reranked.strategy == "centrality"

    def test_central_author_doc_first(self):
        corpus, result, scores = self.path_setup()
        reranked = rerank_centrality(corpus, result, scores)
        ids = reranked.ids()
        assert ids.index("p1") < ids.index("p3")

    def test_hand_sorted_fixture(self):
        corpus, result, scores = self.path_setup()
        reranked = rerank_centrality(corpus, result, scores)
        # key 1.0: p1(5.0), p2(4.0), p6(2.0); key 0.0: p5(7.0), p3(6.0), p4(3.0)
        assert reranked.ids() == ["p1", "p2", "p6", "p5", "p3", "p4"]

    def test_permutation_and_scores_preserved(self):
        corpus, result, scores = self.path_setup()
        reranked = rerank_centrality(corpus, result, scores)
        assert sorted(reranked.entries) == sorted(result.entries)

    def test_missing_author_rejected(self):
        corpus, result, _ = self.path_setup()
        partial = betweenness(
            CoauthorGraph.from_edges(["xu, li"], [])
        )
        with pytest.raises(RerankMismatchError):
            rerank_centrality(corpus, result, partial)
