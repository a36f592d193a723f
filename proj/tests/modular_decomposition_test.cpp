#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mced/edits.hpp"
#include "mced/errors.hpp"
#include "mced/graph_io.hpp"
#include "mced/modular_decomposition.hpp"
#include "oracles.hpp"

using namespace mced;

TEST(Decompose, Clique)
{
	EXPECT_EQ(to_text(decompose(fixture::complete(4))), "S: 0 1 2 3\n  L: 0\n  L: 1\n  L: 2\n  L: 3\n");
}

TEST(Decompose, Edgeless)
{
	EXPECT_EQ(to_text(decompose(Graph(3))), "P: 0 1 2\n  L: 0\n  L: 1\n  L: 2\n");
}

TEST(Decompose, PathOnThree)
{
	const Graph g = fixture::path(3);
	const std::string expected = "S: 0 1 2\n  P: 0 2\n    L: 0\n    L: 2\n  L: 1\n";
	EXPECT_EQ(oracle::brute_md_text(g), expected);
	EXPECT_EQ(to_text(decompose(g)), expected);
}

TEST(Decompose, FiveCycleIsPrime)
{
	const Graph g = fixture::cycle(5);
	EXPECT_EQ(oracle::brute_md_text(g), to_text(decompose(g)));
	const MDTree t = decompose(g);
	EXPECT_EQ(t.node(t.root()).kind, NodeKind::prime);
	EXPECT_EQ(t.node(t.root()).children.size(), 5u);
}

TEST(Decompose, DegenerateInputs)
{
	EXPECT_TRUE(decompose(Graph(0)).empty());
	const MDTree t = decompose(Graph(1));
	EXPECT_EQ(t.num_nodes(), 1u);
	EXPECT_EQ(t.node(t.root()).kind, NodeKind::leaf);
}

TEST(Decompose, MatchesBruteForceExhaustively)
{
	for (std::size_t n = 1; n <= 6; ++n)
		oracle::for_each_labelled_graph(n, [](const Graph &g) {
			ASSERT_EQ(to_text(decompose(g)), oracle::brute_md_text(g)) << serialize_graph(g);
		});
}

TEST(Decompose, MatchesBruteForceOnRandomGraphs)
{
	std::mt19937_64 rng(2024);
	std::uniform_real_distribution<double> density(0.05, 0.95);
	for (int i = 0; i < 10000; ++i) {
		const Graph g = oracle::random_graph(7 + i % 2, density(rng), rng);
		ASSERT_EQ(to_text(decompose(g)), oracle::brute_md_text(g)) << serialize_graph(g);
	}
}

TEST(Decompose, TreeInvariantsOnLargerGraphs)
{
	std::mt19937_64 rng(99);
	for (int i = 0; i < 200; ++i) {
		const Graph g = oracle::random_graph(10 + i % 40, i % 2 ? 0.1 : 0.8, rng);
		const MDTree t = decompose(g);
		EXPECT_EQ(to_text(t), to_text(decompose(g)));
		std::vector<int> leaf_seen(g.num_vertices(), 0);
		for (std::size_t j = 0; j < t.num_nodes(); ++j) {
			const auto &nd = t.node(j);
			const auto members = t.members(j);
			EXPECT_TRUE(is_module(g, members));
			if (nd.kind == NodeKind::leaf) {
				++leaf_seen[nd.vertex];
				continue;
			}
			ASSERT_GE(nd.children.size(), 2u);
			const Graph sub = induced_subgraph(g, members);
			const bool connected = connected_components(sub).size() == 1;
			const bool co_connected = connected_components(complement(sub)).size() == 1;
			EXPECT_EQ(nd.kind == NodeKind::parallel, !connected);
			EXPECT_EQ(nd.kind == NodeKind::series, !co_connected);
			for (auto c : nd.children) {
				if (nd.kind != NodeKind::prime)
					EXPECT_NE(t.node(c).kind, nd.kind);
			}
		}
		for (int s : leaf_seen)
			EXPECT_EQ(s, 1);
	}
}

TEST(Decompose, LargeSparseAndDenseInputs)
{
	std::mt19937_64 rng(5);
	const Graph sparse = oracle::random_graph(3000, 0.002, rng);
	const MDTree a = decompose(sparse);
	EXPECT_EQ(a.node(a.root()).size, 3000u);
	const Graph clique = fixture::complete(2000);
	const MDTree b = decompose(clique);
	EXPECT_EQ(b.node(b.root()).children.size(), 2000u);
}

TEST(QPartition, Examples)
{
	const auto k4 = q_partition(decompose(fixture::complete(4)));
	ASSERT_EQ(k4.size(), 1u);
	EXPECT_EQ(k4[0].members, (VertexSet{0, 1, 2, 3}));

	const auto c5 = q_partition(decompose(fixture::cycle(5)));
	EXPECT_EQ(c5.size(), 5u);
	for (const auto &p : c5)
		EXPECT_EQ(p.members.size(), 1u);

	const auto p3 = q_partition(decompose(fixture::path(3)));
	ASSERT_EQ(p3.size(), 2u);
	EXPECT_EQ(p3[0].members, (VertexSet{0, 2}));
	EXPECT_EQ(p3[1].members, (VertexSet{1}));
}

TEST(QuotientGraph, Examples)
{
	const Graph k4 = fixture::complete(4);
	const auto qk4 = quotient_graph(k4, q_partition(decompose(k4)));
	ASSERT_EQ(qk4.vertices.size(), 1u);
	EXPECT_EQ(qk4.vertices[0].kind, PartKind::S);
	EXPECT_EQ(qk4.adjacency.num_edges(), 0u);
	EXPECT_EQ(count_kinds(qk4), (KindCounts{0, 0, 1}));

	const auto qp3 = q_quotient(fixture::path(3));
	ASSERT_EQ(qp3.vertices.size(), 2u);
	EXPECT_EQ(qp3.vertices[0].kind, PartKind::P);
	EXPECT_EQ(qp3.vertices[1].kind, PartKind::U);
	EXPECT_TRUE(qp3.adjacency.has_edge(0, 1));
	EXPECT_EQ(count_kinds(qp3), (KindCounts{1, 1, 0}));
	EXPECT_EQ(to_text(qp3), "q0 P: 0 2\nq1 U: 1\nq0 -- q1\n");

	EXPECT_EQ(count_kinds(q_quotient(fixture::cycle(5))), (KindCounts{5, 0, 0}));

	const Graph two_k2 = fixture::copies(fixture::complete(2), 2);
	const auto q2 = quotient_graph(two_k2, {{{0, 1}, NodeKind::series}, {{2, 3}, NodeKind::series}});
	EXPECT_EQ(count_kinds(q2), (KindCounts{0, 0, 2}));
	EXPECT_EQ(q2.adjacency.num_edges(), 0u);
}

TEST(QuotientGraph, RejectsBadPartitions)
{
	const Graph p3 = fixture::path(3);
	EXPECT_THROW(quotient_graph(p3, {{{0, 1}, NodeKind::series}, {{2}, NodeKind::leaf}}), InvariantViolation);
	EXPECT_THROW(quotient_graph(p3, {{{0, 2}, NodeKind::parallel}}), InvariantViolation);
	EXPECT_THROW(quotient_graph(p3, {{{0, 2}, NodeKind::series}, {{1}, NodeKind::leaf}}), InvariantViolation);
}

TEST(QuotientGraph, OneLeafChildIsTypedU)
{
	// S root over leaf 1 and P node {0,2}: the S node has a single leaf child.
	const auto q = q_quotient(fixture::path(3));
	for (const auto &v : q.vertices)
		if (v.members.size() == 1)
			EXPECT_EQ(v.kind, PartKind::U);
}

TEST(QuotientGraph, CongruenceExhaustive)
{
	for (std::size_t n = 1; n <= 6; ++n)
		oracle::for_each_labelled_graph(n, [](const Graph &g) {
			const auto q = q_quotient(g);
			std::vector<int> owner(g.num_vertices(), -1);
			for (std::size_t i = 0; i < q.vertices.size(); ++i)
				for (Vertex v : q.vertices[i].members) {
					ASSERT_EQ(owner[v], -1);
					owner[v] = static_cast<int>(i);
				}
			for (Vertex a = 0; a < g.num_vertices(); ++a)
				for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
					const auto qa = static_cast<Vertex>(owner[a]);
					const auto qb = static_cast<Vertex>(owner[b]);
					if (qa == qb) {
						const auto kind = q.vertices[qa].kind;
						ASSERT_EQ(g.has_edge(a, b), kind == PartKind::S) << serialize_graph(g);
					} else {
						ASSERT_EQ(g.has_edge(a, b), q.adjacency.has_edge(qa, qb)) << serialize_graph(g);
					}
				}
		});
}

TEST(QuotientGraph, CongruenceOnRandomEightVertexGraphs)
{
	std::mt19937_64 rng(8);
	for (int i = 0; i < 3000; ++i) {
		const Graph g = oracle::random_graph(8, 0.5, rng);
		EXPECT_NO_THROW(q_quotient(g));
	}
}

TEST(QuotientGraph, OneEditBounds)
{
	std::mt19937_64 rng(6);
	std::uniform_real_distribution<double> density(0.1, 0.9);
	for (int i = 0; i < 10000; ++i) {
		const std::size_t n = 2 + i % 11;
		const Graph g = oracle::random_graph(n, density(rng), rng);
		std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
		Vertex a = pick(rng), b = pick(rng);
		while (a == b)
			b = pick(rng);
		const Graph h = apply_edits(g, {toggle_of(g, a, b)});
		const auto before = count_kinds(q_quotient(g));
		const auto after = count_kinds(q_quotient(h));
		ASSERT_LE(after.u, before.u + 4) << serialize_graph(g);
		ASSERT_LE(after.p, before.p + 2) << serialize_graph(g);
		ASSERT_LE(after.s, before.s + 2) << serialize_graph(g);
		ASSERT_LE(after.total(), before.total() + 2) << serialize_graph(g);
	}
}

TEST(SAndPPartitions, GroupOnlyTheirOwnKind)
{
	const Graph p3 = fixture::path(3);
	const auto t = decompose(p3);
	EXPECT_EQ(s_partition(t).size(), 3u);
	const auto p = p_partition(t);
	ASSERT_EQ(p.size(), 2u);
	EXPECT_EQ(p[0].members, (VertexSet{0, 2}));
}

TEST(Serialization, DotMentionsEveryNode)
{
	const MDTree t = decompose(fixture::path(4));
	const auto dot = to_dot(t);
	EXPECT_EQ(dot.rfind("digraph", 0), 0u);
	for (std::size_t i = 0; i < t.num_nodes(); ++i)
		EXPECT_NE(dot.find("n" + std::to_string(i) + " ["), std::string::npos);
	EXPECT_EQ(to_dot(q_quotient(fixture::path(3))).rfind("graph quotient", 0), 0u);
}
