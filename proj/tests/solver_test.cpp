#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "mced/errors.hpp"
#include "mced/gadgets.hpp"
#include "mced/graph_io.hpp"
#include "mced/solver.hpp"
#include "oracles.hpp"

using namespace mced;

namespace {

SolveOptions plain()
{
	SolveOptions o;
	o.kernelize = false;
	return o;
}

Graph two_p4() { return fixture::copies(fixture::path(4), 2); }

} // namespace

TEST(SolveBounded, Examples)
{
	const auto p3 = solve_bounded(fixture::path(3), 2, 0);
	EXPECT_TRUE(p3.yes);
	EXPECT_TRUE(p3.edits.empty());

	const auto p4 = solve_bounded(fixture::path(4), 2, 1);
	ASSERT_TRUE(p4.yes);
	EXPECT_EQ(p4.edits.size(), 1u);
	EXPECT_TRUE(verify_solution(fixture::path(4), 2, p4.edits, 1));

	EXPECT_FALSE(solve_bounded(fixture::k_minus_e(4), 2, 0).yes);
	const auto kme = solve_bounded(fixture::k_minus_e(4), 2, 1);
	ASSERT_TRUE(kme.yes);
	ASSERT_EQ(kme.edits.size(), 1u);
	EXPECT_TRUE(verify_solution(fixture::k_minus_e(4), 2, kme.edits, 1));

	const auto paw = solve_bounded(fixture::paw(), 2, 1);
	ASSERT_TRUE(paw.yes);
	EXPECT_TRUE(verify_solution(fixture::paw(), 2, paw.edits, 1));
}

TEST(SolveBounded, KMinusEAddsTheMissingEdgeFirst)
{
	// Witness KME 0 1 | 2 3; pairs are tried in lexicographic order, so the
	// first branch adds 0-1 and completes K4.
	const auto r = solve_bounded(fixture::k_minus_e(4), 2, 1, plain());
	ASSERT_TRUE(r.yes);
	EXPECT_EQ(r.edits, (EditSet{{EditSign::add, 0, 1}}));
}

TEST(SolveBounded, AgreesWithOracleExhaustively)
{
	for (std::size_t n = 0; n <= 5; ++n)
		oracle::for_each_labelled_graph(n, [](const Graph &g) {
			for (int l : {2, 3})
				for (int k = 0; k <= 3; ++k) {
					const bool expected = brute_force_oracle(g, l, k).has_value();
					for (bool use_kernel : {false, true}) {
						SolveOptions o;
						o.kernelize = use_kernel;
						const auto r = solve_bounded(g, l, k, o);
						ASSERT_EQ(r.yes, expected) << serialize_graph(g) << " l=" << l << " k=" << k;
						ASSERT_LE(r.max_branching, branching_bound(l));
						if (r.yes)
							ASSERT_TRUE(verify_solution(g, l, r.edits, k));
					}
				}
		});
}

TEST(SolveBounded, AgreesWithOracleOnRandomGraphs)
{
	std::mt19937_64 rng(31);
	std::uniform_real_distribution<double> density(0.1, 0.9);
	for (int i = 0; i < 1500; ++i) {
		const Graph g = oracle::random_graph(6 + i % 2, density(rng), rng);
		const int l = 2 + i % 2;
		bool previous = false;
		for (int k = 0; k <= 3; ++k) {
			const bool expected = brute_force_oracle(g, l, k).has_value();
			const auto kernelized = solve_bounded(g, l, k);
			const auto direct = solve_bounded(g, l, k, plain());
			ASSERT_EQ(kernelized.yes, expected) << serialize_graph(g) << " l=" << l << " k=" << k;
			ASSERT_EQ(direct.yes, expected) << serialize_graph(g) << " l=" << l << " k=" << k;
			if (kernelized.yes)
				ASSERT_TRUE(verify_solution(g, l, kernelized.edits, k));
			if (previous)
				ASSERT_TRUE(kernelized.yes) << "not monotone in k";
			previous = kernelized.yes;
		}
	}
}

TEST(SolveBounded, ParallelGivesTheSameEdits)
{
	std::mt19937_64 rng(41);
	SolveOptions par;
	par.parallel = true;
	for (int i = 0; i < 300; ++i) {
		const Graph g = oracle::random_graph(7, 0.5, rng);
		for (int k = 0; k <= 3; ++k) {
			const auto a = solve_bounded(g, 2, k);
			const auto b = solve_bounded(g, 2, k, par);
			ASSERT_EQ(a.yes, b.yes);
			ASSERT_EQ(a.edits, b.edits);
			if (b.yes)
				ASSERT_TRUE(verify_solution(g, 2, b.edits, k));
		}
	}
}

TEST(SolveBounded, LiftsThroughTruncation)
{
	// Large modules force truncation; the returned edits must solve the input.
	for (std::uint64_t seed = 0; seed < 60; ++seed) {
		const int l = 2 + static_cast<int>(seed % 2);
		const int k = 1 + static_cast<int>(seed % 3);
		const auto inst = gen_planted(3, {9 + seed % 6}, l, static_cast<std::size_t>(k), seed);
		const auto r = solve_bounded(inst.graph, l, k);
		ASSERT_TRUE(r.yes);
		EXPECT_TRUE(verify_solution(inst.graph, l, r.edits, k)) << serialize_graph(inst.graph);
	}
}

TEST(SolveBounded, NodeLimit)
{
	SolveOptions o = plain();
	o.max_nodes = 3;
	EXPECT_THROW(solve_bounded(fixture::copies(fixture::path(4), 3), 2, 3, o), ResourceLimit);
}

TEST(SolveOptimal, Examples)
{
	EXPECT_EQ(solve_optimal(disjoint_union(fixture::complete(4), fixture::cycle(4)), 2).opt, 0);
	EXPECT_EQ(solve_optimal(fixture::path(4), 2).opt, 1);
	const auto r = solve_optimal(two_p4(), 2);
	EXPECT_EQ(r.opt, 2);
	EXPECT_TRUE(verify_solution(two_p4(), 2, r.edits, 2));
	EXPECT_THROW(solve_optimal(two_p4(), 2, 1), ResourceLimit);
}

TEST(BruteForceOracle, Examples)
{
	EXPECT_TRUE(brute_force_oracle(fixture::complete(3), 2, 0));
	EXPECT_FALSE(brute_force_oracle(fixture::path(4), 2, 0));
	const auto c5 = brute_force_oracle(fixture::cycle(5), 2, 1);
	EXPECT_EQ(c5.has_value(), solve_bounded(fixture::cycle(5), 2, 1).yes);
}

TEST(BruteForceOracle, RefusesLargeInstances)
{
	const Graph g = fixture::path(9); // 36 pairs
	EXPECT_THROW(brute_force_oracle(g, 2, 5), ResourceLimit);
	EXPECT_NO_THROW(brute_force_oracle(g, 2, 2));
	::setenv("MCED_MAX_ORACLE_PAIRS", "40", 1);
	EXPECT_EQ(oracle_pair_limit(), 40u);
	EXPECT_NO_THROW(brute_force_oracle(fixture::path(5), 2, 5));
	::unsetenv("MCED_MAX_ORACLE_PAIRS");
	EXPECT_EQ(oracle_pair_limit(), 28u);
}

TEST(VerifySolution, Examples)
{
	EXPECT_TRUE(verify_solution(fixture::path(4), 2, {{EditSign::remove, 1, 2}}, 1));
	EXPECT_FALSE(verify_solution(fixture::path(4), 2, {}, 0));
	EXPECT_TRUE(verify_solution(fixture::complete(3), 2, {}, 0));
	EXPECT_FALSE(verify_solution(fixture::path(4), 2, {{EditSign::remove, 1, 2}}, 0));
	EXPECT_THROW(verify_solution(fixture::path(4), 2, {{EditSign::add, 1, 2}}, 1), InvalidEdit);
}

TEST(ExactEditDistance, MatchesBruteForce)
{
	auto check = [](const Graph &g) {
		for (auto family : {Family::cluster, Family::l_cluster, Family::kl_cluster, Family::bicluster})
			for (int l : {2, 3}) {
				const auto f = brute_force_edit(g, family, l, 10);
				ASSERT_TRUE(f);
				ASSERT_EQ(exact_edit_distance(g, family, l), f->size()) << serialize_graph(g);
			}
	};
	for (std::size_t n = 0; n <= 4; ++n)
		oracle::for_each_labelled_graph(n, check);
	std::mt19937_64 rng(12);
	for (int i = 0; i < 150; ++i)
		check(oracle::random_graph(5, 0.5, rng));
	EXPECT_THROW(exact_edit_distance(Graph(17), Family::cluster, 2), ResourceLimit);
}

TEST(OrderEdits, Examples)
{
	const EditSet middle{{EditSign::remove, 1, 2}};
	EXPECT_EQ(order_edits_lemma2(fixture::path(4), 2, middle), middle);

	const EditSet both{{EditSign::remove, 5, 6}, {EditSign::remove, 1, 2}};
	const auto ordered = order_edits_lemma2(two_p4(), 2, both);
	EXPECT_EQ(ordered, both); // index order is tried first and already works
	EXPECT_EQ(order_edits_lemma2(two_p4(), 2, ordered), ordered);

	const EditSet redundant{{EditSign::remove, 1, 2}, {EditSign::remove, 0, 1}};
	EXPECT_THROW(order_edits_lemma2(fixture::path(4), 2, redundant), PreconditionError);
	EXPECT_THROW(order_edits_lemma2(fixture::path(4), 2, {}), PreconditionError);
}

TEST(OrderEdits, SucceedsOnOptimalSolutions)
{
	std::mt19937_64 rng(66);
	for (int i = 0; i < 400; ++i) {
		const Graph g = oracle::random_graph(5 + i % 3, 0.5, rng);
		const int l = 2 + i % 2;
		const auto r = solve_optimal(g, l);
		const auto ordered = order_edits_lemma2(g, l, r.edits);
		ASSERT_EQ(ordered.size(), r.edits.size());
	}
}
