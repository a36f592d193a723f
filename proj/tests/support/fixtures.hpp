#pragma once

#include <initializer_list>
#include <vector>

#include "mced/graph.hpp"

namespace mced::fixture {

inline Graph path(std::size_t n)
{
	std::vector<Edge> e;
	for (Vertex i = 0; i + 1 < n; ++i)
		e.emplace_back(i, i + 1);
	return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n)
{
	std::vector<Edge> e;
	for (Vertex i = 0; i < n; ++i)
		e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
	return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n)
{
	std::vector<Edge> e;
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j)
			e.emplace_back(i, j);
	return Graph::from_edges(n, e);
}

/// Classes are consecutive vertex ranges.
inline Graph complete_multipartite(std::initializer_list<std::size_t> sizes)
{
	std::vector<std::size_t> cls;
	for (std::size_t c = 0; auto s : sizes) {
		cls.insert(cls.end(), s, c);
		++c;
	}
	std::vector<Edge> e;
	for (Vertex i = 0; i < cls.size(); ++i)
		for (Vertex j = i + 1; j < cls.size(); ++j)
			if (cls[i] != cls[j])
				e.emplace_back(i, j);
	return Graph::from_edges(cls.size(), e);
}

/// Triangle 0,1,2 with pendant 3 on 0.
inline Graph paw()
{
	const Edge e[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
	return Graph::from_edges(4, e);
}

/// K_r minus the edge {0,1}.
inline Graph k_minus_e(std::size_t r)
{
	std::vector<Edge> e;
	for (Vertex i = 0; i < r; ++i)
		for (Vertex j = i + 1; j < r; ++j)
			if (!(i == 0 && j == 1))
				e.emplace_back(i, j);
	return Graph::from_edges(r, e);
}

inline Graph star(std::size_t leaves)
{
	std::vector<Edge> e;
	for (Vertex i = 1; i <= leaves; ++i)
		e.emplace_back(0, i);
	return Graph::from_edges(leaves + 1, e);
}

inline Graph copies(const Graph &g, std::size_t times)
{
	Graph out(0);
	for (std::size_t i = 0; i < times; ++i)
		out = disjoint_union(out, g);
	return out;
}

} // namespace mced::fixture
