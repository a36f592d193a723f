#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mced {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency lists are sorted and symmetric; there are no loops or parallel
/// edges. Instances are immutable once built, so they can be shared freely
/// between threads. Editing goes through `apply_edits`, which returns a new
/// graph.
class Graph {
public:
	Graph() = default;

	/// Edgeless graph on n vertices.
	explicit Graph(std::size_t n);

	/// Builds from an edge list. Throws InvalidEdit on loops, duplicates or
	/// out-of-range endpoints.
	static Graph from_edges(std::size_t n, std::span<const Edge> edges);

	/// Builds from adjacency lists that are already symmetric. Lists are sorted
	/// here; symmetry is checked.
	static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

	std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
	std::size_t num_edges() const noexcept { return m_; }

	std::span<const Vertex> neighbors(Vertex v) const
	{
		return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
	}
	std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

	/// O(log deg) membership test.
	bool has_edge(Vertex u, Vertex v) const;

	/// All edges (u,v) with u < v, sorted.
	std::vector<Edge> edges() const;

	friend bool operator==(const Graph &, const Graph &) = default;

private:
	// Compressed rows: the neighbours of v are targets_[offsets_[v] .. offsets_[v+1]).
	std::vector<std::size_t> offsets_ = std::vector<std::size_t>(1, 0);
	std::vector<Vertex> targets_;
	std::size_t m_ = 0;
};

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// Vertex sets of the connected components. Each set is sorted and the
/// components are ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph &g);

/// True iff every vertex outside `s` sees either all of `s` or none of it.
bool is_module(const Graph &g, std::span<const Vertex> s);

/// Complement graph. Quadratic; intended for small graphs and tests.
Graph complement(const Graph &g);

/// Disjoint union, the vertices of `b` shifted by a.num_vertices().
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace mced
