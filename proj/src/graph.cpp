#include "mced/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mced/errors.hpp"

namespace mced {

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
	Graph g(n);
	for (auto [u, v] : edges) {
		if (u >= n || v >= n)
			throw InvalidEdit("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
		if (u == v)
			throw InvalidEdit("self-loop at " + std::to_string(u));
		++g.offsets_[u + 1];
		++g.offsets_[v + 1];
	}
	for (std::size_t v = 0; v < n; ++v)
		g.offsets_[v + 1] += g.offsets_[v];
	g.targets_.resize(2 * edges.size());
	std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
	for (auto [u, v] : edges) {
		g.targets_[fill[u]++] = v;
		g.targets_[fill[v]++] = u;
	}
	for (std::size_t v = 0; v < n; ++v) {
		const auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
		const auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
		std::sort(first, last);
		if (std::adjacent_find(first, last) != last)
			throw InvalidEdit("duplicate edge");
	}
	g.m_ = edges.size();
	return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency)
{
	std::size_t total = 0;
	const auto n = adjacency.size();
	for (Vertex v = 0; v < n; ++v) {
		auto &list = adjacency[v];
		std::sort(list.begin(), list.end());
		if (std::adjacent_find(list.begin(), list.end()) != list.end())
			throw InvalidEdit("duplicate edge at " + std::to_string(v));
		if (!list.empty() && list.back() >= n)
			throw InvalidEdit("neighbor out of range at " + std::to_string(v));
		if (std::binary_search(list.begin(), list.end(), v))
			throw InvalidEdit("self-loop at " + std::to_string(v));
		total += list.size();
	}
	for (Vertex v = 0; v < n; ++v)
		for (Vertex w : adjacency[v])
			if (!std::binary_search(adjacency[w].begin(), adjacency[w].end(), v))
				throw InvalidEdit("asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(w));

	Graph g(n);
	g.targets_.reserve(total);
	for (Vertex v = 0; v < n; ++v) {
		g.targets_.insert(g.targets_.end(), adjacency[v].begin(), adjacency[v].end());
		g.offsets_[v + 1] = g.targets_.size();
		std::vector<Vertex>().swap(adjacency[v]);
	}
	g.m_ = total / 2;
	return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
	const auto a = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
	const Vertex other = degree(u) <= degree(v) ? v : u;
	return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const
{
	std::vector<Edge> out;
	out.reserve(m_);
	for (Vertex u = 0; u < num_vertices(); ++u)
		for (Vertex v : neighbors(u))
			if (u < v)
				out.emplace_back(u, v);
	return out;
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
	constexpr Vertex absent = ~Vertex{0};
	std::vector<Vertex> local(g.num_vertices(), absent);
	for (std::size_t i = 0; i < vertices.size(); ++i)
		local[vertices[i]] = static_cast<Vertex>(i);

	std::vector<std::vector<Vertex>> adj(vertices.size());
	for (std::size_t i = 0; i < vertices.size(); ++i)
		for (Vertex w : g.neighbors(vertices[i]))
			if (local[w] != absent)
				adj[i].push_back(local[w]);
	return Graph::from_adjacency(std::move(adj));
}

std::vector<VertexSet> connected_components(const Graph &g)
{
	const auto n = g.num_vertices();
	std::vector<char> seen(n, 0);
	std::vector<VertexSet> comps;
	std::vector<Vertex> stack;
	for (Vertex s = 0; s < n; ++s) {
		if (seen[s])
			continue;
		VertexSet comp;
		seen[s] = 1;
		stack.push_back(s);
		while (!stack.empty()) {
			Vertex u = stack.back();
			stack.pop_back();
			comp.push_back(u);
			for (Vertex w : g.neighbors(u))
				if (!seen[w]) {
					seen[w] = 1;
					stack.push_back(w);
				}
		}
		std::sort(comp.begin(), comp.end());
		comps.push_back(std::move(comp));
	}
	return comps;
}

bool is_module(const Graph &g, std::span<const Vertex> s)
{
	if (s.size() <= 1)
		return true;
	// A module is uniform from outside: every outside vertex adjacent to some
	// member must be adjacent to all |s| members.
	const std::unordered_set<Vertex> inside(s.begin(), s.end());
	std::unordered_map<Vertex, std::size_t> hits;
	for (Vertex v : s)
		for (Vertex w : g.neighbors(v))
			if (!inside.count(w))
				++hits[w];
	return std::all_of(hits.begin(), hits.end(), [&](const auto &h) { return h.second == s.size(); });
}

Graph complement(const Graph &g)
{
	const auto n = g.num_vertices();
	std::vector<std::vector<Vertex>> adj(n);
	std::vector<char> mark(n, 0);
	for (Vertex u = 0; u < n; ++u) {
		for (Vertex w : g.neighbors(u))
			mark[w] = 1;
		for (Vertex v = 0; v < n; ++v)
			if (v != u && !mark[v])
				adj[u].push_back(v);
		for (Vertex w : g.neighbors(u))
			mark[w] = 0;
	}
	return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
	const auto shift = static_cast<Vertex>(a.num_vertices());
	std::vector<std::vector<Vertex>> adj(a.num_vertices() + b.num_vertices());
	for (Vertex v = 0; v < a.num_vertices(); ++v)
		adj[v].assign(a.neighbors(v).begin(), a.neighbors(v).end());
	for (Vertex v = 0; v < b.num_vertices(); ++v)
		for (Vertex w : b.neighbors(v))
			adj[v + shift].push_back(w + shift);
	return Graph::from_adjacency(std::move(adj));
}

} // namespace mced
