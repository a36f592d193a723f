#include "mced/dense_graph.hpp"

#include <numeric>

namespace mced {

DenseGraph::DenseGraph(const Graph &g) : DenseGraph(g.num_vertices())
{
	for (Vertex u = 0; u < n_; ++u)
		for (Vertex v : g.neighbors(u))
			row_(u)[v >> 6] |= Word{1} << (v & 63);
}

std::size_t DenseGraph::degree(Vertex v) const
{
	std::size_t d = 0;
	for (Word w : row(v))
		d += static_cast<std::size_t>(std::popcount(w));
	return d;
}

std::size_t DenseGraph::num_edges() const
{
	std::size_t total = 0;
	for (Vertex v = 0; v < n_; ++v)
		total += degree(v);
	return total / 2;
}

Graph DenseGraph::to_graph() const
{
	std::vector<std::vector<Vertex>> adj(n_);
	for (Vertex v = 0; v < n_; ++v)
		for_each_bit(row(v), [&](Vertex w) { adj[v].push_back(w); });
	return Graph::from_adjacency(std::move(adj));
}

} // namespace mced
