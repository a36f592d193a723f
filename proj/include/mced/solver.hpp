#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mced/edits.hpp"
#include "mced/graph.hpp"
#include "mced/kernelization.hpp"
#include "mced/recognition.hpp"

namespace mced {

struct SolveOptions {
	bool kernelize = true;
	/// Explore the root's children on separate threads. The answer and the
	/// returned edit set are the same as in sequential mode; only the node
	/// count differs.
	bool parallel = false;
	/// Abort with ResourceLimit after this many search nodes; 0 = unlimited.
	std::uint64_t max_nodes = 0;
};

struct SolveResult {
	bool yes = false;
	EditSet edits;                   // on yes, vertices of the input graph
	std::uint64_t nodes_explored = 0;
	std::size_t max_branching = 0;   // largest child count of any search node
	bool kernelized = false;
	KernelStatus kernel_status = KernelStatus::kernel;
	KernelStats kernel_stats;
	/// True when the kernel solution had to be recomputed on the untruncated
	/// graph because its image did not solve the input.
	bool lift_fallback = false;
};

/// Largest number of children a search node may have: (l+2)(l+1)/2.
std::size_t branching_bound(int l);

/// Decides whether at most k edits turn g into an L-cluster graph. Kernelizes
/// once at the root, then branches on every vertex pair of the forbidden
/// subgraph reported by find_forbidden, never toggling a pair twice on a path.
SolveResult solve_bounded(const Graph &g, int l, int k, const SolveOptions &options = {});

struct OptimalResult {
	int opt = 0;
	EditSet edits;
	std::uint64_t nodes_explored = 0;
};

/// Smallest k for which solve_bounded says yes. Throws ResourceLimit when no
/// solution of size max_k or less exists.
OptimalResult solve_optimal(const Graph &g, int l, int max_k = 32, const SolveOptions &options = {});

/// True iff |f| <= k and g+f is an L-cluster graph. Throws InvalidEdit when f
/// does not fit g.
bool verify_solution(const Graph &g, int l, const EditSet &f, int k);

/// Pair-count ceiling for the exhaustive oracles: MCED_MAX_ORACLE_PAIRS, or 28.
std::size_t oracle_pair_limit();

/// Exhaustive search over all pair subsets of size 0..k, smallest first; the
/// first hit in lexicographic pair order is returned. Refuses with
/// ResourceLimit when C(n,2) exceeds oracle_pair_limit() and k > 4.
std::optional<EditSet> brute_force_oracle(const Graph &g, int l, int k);

/// Same enumeration for any target family.
std::optional<EditSet> brute_force_edit(const Graph &g, Family family, int l, int k);

/// Number of distinct edit sets of exactly `size` pairs that reach `family`.
std::uint64_t count_solutions(const Graph &g, Family family, int l, int size);

/// Minimum number of edits turning g into `family`, by dynamic programming
/// over vertex subsets (O(l 3^n)). Throws ResourceLimit above 16 vertices.
std::size_t exact_edit_distance(const Graph &g, Family family, int l);

/// Reorders a minimal solution so that every edit toggles a pair lying inside
/// some forbidden subgraph of the graph edited so far. Throws
/// PreconditionError when f is not a solution or not inclusion-minimal.
EditSet order_edits_lemma2(const Graph &g, int l, const EditSet &f);

} // namespace mced
