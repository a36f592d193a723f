#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mced/graph.hpp"
#include "mced/modular_decomposition.hpp"
#include "mced/recognition.hpp"

namespace mced {

/// Vertex count that a kernel for (l,k) never exceeds:
/// 2lk(k+2) + 2k(l+k+1).
std::size_t kernel_size_bound(int l, int k);

struct TrivialRemoval {
	Graph graph;                      // g minus all clique and l-clique components
	std::vector<Vertex> vertex_map;   // new vertex -> vertex of g
	std::vector<VertexSet> removed;   // removed components, as vertex sets of g
};

TrivialRemoval remove_trivial_components(const Graph &g, int l);

struct FilterResult {
	bool pass = true;
	std::string reason; // empty on pass
	KindCounts counts;
	std::size_t components = 0;
};

/// No-instance test on a graph without trivial components: a yes-instance
/// satisfies |V(G_Q)| <= (2l+2)k, |P| <= 2lk, |S| <= 2k and has at most 2k
/// components. A failed bound certifies a no-instance.
FilterResult quotient_size_filter(const Graph &g, int l, int k);

struct TruncationEntry {
	PartKind kind;
	VertexSet module;  // vertices of the input graph
	std::size_t kept;  // the `kept` smallest members survive
};

struct Truncation {
	Graph graph;
	std::vector<Vertex> vertex_map; // new vertex -> input vertex
	std::vector<TruncationEntry> log;
	std::size_t vertices_removed = 0;
};

/// Shrinks every P-vertex of G_Q to k+2 members and every S-vertex to l+k+1,
/// keeping the lowest-numbered members.
Truncation truncate_modules(const Graph &g, int l, int k);

enum class KernelStatus { kernel, no, trivially_yes };

const char *to_string(KernelStatus s);

struct KernelStats {
	std::size_t components_removed = 0;
	std::size_t vertices_truncated = 0;
	std::size_t quotient_size = 0;
	KindCounts counts;
};

struct KernelResult {
	KernelStatus status = KernelStatus::kernel;
	Graph graph;                    // meaningful for status kernel
	std::string reason;             // for status no
	std::vector<Vertex> vertex_map; // kernel vertex -> input vertex
	KernelStats stats;
};

/// Trivial-component removal, then the quotient filter, then truncation.
/// Throws InvariantViolation if a kernel exceeds kernel_size_bound(l,k).
KernelResult kernelize(const Graph &g, int l, int k);

/// key=value report lines followed by the kernel graph in edge-list format
/// with a "# vertex_map" comment block.
std::string kernel_report(const KernelResult &r, int l, int k);

// ---------------------------------------------------------------------------
// Weighted quotients for Cluster Editing (S-partition) and Bicluster Editing
// (P-partition). Pair weights are products of member counts.

struct WeightedQuotientInstance {
	std::vector<QuotientVertex> vertices;
	Graph adjacency;

	std::size_t size() const noexcept { return vertices.size(); }
	std::uint64_t weight(std::size_t i, std::size_t j) const
	{
		return static_cast<std::uint64_t>(vertices[i].members.size()) * vertices[j].members.size();
	}
	bool is_edge(std::size_t i, std::size_t j) const
	{
		return adjacency.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
	}
};

WeightedQuotientInstance build_weighted_s_quotient(const Graph &g);
WeightedQuotientInstance build_weighted_p_quotient(const Graph &g);

/// Smallest total weight of a pair toggle set that turns the quotient into a
/// member of `family` (cluster or bicluster), if it is at most `budget`.
/// Exhaustive; refuses more than 64 pairs with ResourceLimit.
std::optional<std::uint64_t> weighted_min_cost(const WeightedQuotientInstance &q, Family family, std::uint64_t budget);

} // namespace mced
