#include "mced/recognition.hpp"

#include <algorithm>
#include <set>

#include "mced/errors.hpp"
#include "mced/modular_decomposition.hpp"

namespace mced {

std::string to_string(const Witness &w)
{
	std::string out;
	auto append = [&](std::size_t from, std::size_t to) {
		for (std::size_t i = from; i < to; ++i)
			out += ' ' + std::to_string(w.vertices[i]);
	};
	switch (w.kind) {
	case WitnessKind::p4:
		out = "P4:";
		append(0, w.vertices.size());
		break;
	case WitnessKind::paw:
		out = "PAW:";
		append(0, 3);
		out += " /";
		append(3, w.vertices.size());
		break;
	case WitnessKind::k_minus_e:
		out = "KME:";
		append(0, 2);
		out += " |";
		append(2, w.vertices.size());
		break;
	}
	return out;
}

bool is_valid_witness(const Graph &g, const Witness &w, int l)
{
	const auto &vs = w.vertices;
	const std::size_t expected = w.kind == WitnessKind::k_minus_e ? static_cast<std::size_t>(l) + 2 : 4;
	if (vs.size() != expected)
		return false;
	if (std::set<Vertex>(vs.begin(), vs.end()).size() != vs.size())
		return false;
	if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return v >= g.num_vertices(); }))
		return false;

	auto should_be_adjacent = [&](std::size_t i, std::size_t j) {
		switch (w.kind) {
		case WitnessKind::p4:
			return j == i + 1;
		case WitnessKind::paw:
			// triangle on positions 0,1,2; pendant 3 attached to 0
			return j < 3 || i == 0;
		case WitnessKind::k_minus_e:
			return !(i == 0 && j == 1);
		}
		return false;
	};
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = i + 1; j < vs.size(); ++j)
			if (g.has_edge(vs[i], vs[j]) != should_be_adjacent(i, j))
				return false;
	return true;
}

namespace {

// Position of each member within a vertex list, by binary search over a
// sorted copy; components are small and this avoids any O(n) scratch.
class LocalIndex {
public:
	static constexpr std::size_t absent = ~std::size_t{0};

	explicit LocalIndex(std::span<const Vertex> vs)
	{
		entries_.reserve(vs.size());
		for (std::size_t i = 0; i < vs.size(); ++i)
			entries_.emplace_back(vs[i], i);
		std::sort(entries_.begin(), entries_.end());
	}

	bool has_duplicates() const
	{
		return std::adjacent_find(entries_.begin(), entries_.end(),
		                          [](const auto &a, const auto &b) { return a.first == b.first; }) != entries_.end();
	}

	std::size_t find(Vertex v) const
	{
		auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair<Vertex, std::size_t>{v, 0});
		return it != entries_.end() && it->first == v ? it->second : absent;
	}

private:
	std::vector<std::pair<Vertex, std::size_t>> entries_;
};

// Co-components of G[comp]; `local` maps each member to its index in comp.
std::vector<std::size_t> co_component_sizes(const Graph &g, std::span<const Vertex> comp, const LocalIndex &local)
{
	std::vector<std::size_t> unvisited(comp.size());
	for (std::size_t i = 0; i < comp.size(); ++i)
		unvisited[i] = i;
	std::vector<char> adjacent(comp.size(), 0);
	std::vector<std::size_t> keep, queue, sizes, marked;
	while (!unvisited.empty()) {
		queue.assign(1, unvisited.back());
		unvisited.pop_back();
		for (std::size_t head = 0; head < queue.size() && !unvisited.empty(); ++head) {
			const Vertex u = comp[queue[head]];
			marked.clear();
			for (Vertex w : g.neighbors(u))
				if (const auto i = local.find(w); i != LocalIndex::absent) {
					adjacent[i] = 1;
					marked.push_back(i);
				}
			keep.clear();
			for (auto i : unvisited)
				(adjacent[i] ? keep : queue).push_back(i);
			for (auto i : marked)
				adjacent[i] = 0;
			unvisited.swap(keep);
		}
		sizes.push_back(queue.size());
	}
	return sizes;
}

} // namespace

ComponentClass classify_component(const Graph &g, std::span<const Vertex> comp, int l)
{
	if (comp.empty())
		throw PreconditionError("empty vertex set is not a component");
	const LocalIndex local(comp);
	if (local.has_duplicates() || std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return v >= g.num_vertices(); }))
		throw PreconditionError("component vertex list is invalid");
	std::size_t degree_sum = 0;
	for (Vertex v : comp)
		for (Vertex w : g.neighbors(v)) {
			if (local.find(w) == LocalIndex::absent)
				throw PreconditionError("vertex set is not closed under adjacency, so it is not a component");
			++degree_sum;
		}
	// Connectivity within comp.
	std::vector<char> seen(comp.size(), 0);
	std::vector<Vertex> stack{comp.front()};
	seen[0] = 1;
	std::size_t reached = 0;
	while (!stack.empty()) {
		Vertex u = stack.back();
		stack.pop_back();
		++reached;
		for (Vertex w : g.neighbors(u))
			if (auto &mark = seen[local.find(w)]; !mark) {
				mark = 1;
				stack.push_back(w);
			}
	}
	if (reached != comp.size())
		throw PreconditionError("vertex set is not connected, so it is not a component");

	const std::size_t c = comp.size();
	const std::size_t edges = degree_sum / 2;
	ComponentClass out;
	if (edges == c * (c - 1) / 2) {
		out.tag = ComponentClass::Tag::clique;
		out.clique_size = c;
		return out;
	}

	auto sizes = co_component_sizes(g, comp, local);
	// Complete multipartite iff every co-component is independent, i.e. all
	// edges run between distinct co-components.
	std::size_t cross = 0, seen_so_far = 0;
	for (auto s : sizes) {
		cross += s * seen_so_far;
		seen_so_far += s;
	}
	if (sizes.size() >= 2 && sizes.size() <= static_cast<std::size_t>(l) && cross == edges) {
		std::sort(sizes.begin(), sizes.end());
		out.tag = ComponentClass::Tag::l_clique;
		out.part_sizes = std::move(sizes);
	}
	return out;
}

bool is_l_cluster_graph(const Graph &g, int l)
{
	for (const auto &comp : connected_components(g))
		if (classify_component(g, comp, l).tag == ComponentClass::Tag::other)
			return false;
	return true;
}

namespace {

constexpr std::size_t dense_limit = 16384;

using Tuple = std::vector<Vertex>;

// Lexicographically smallest induced P4 a-b-c-d of a dense graph.
std::optional<Tuple> min_p4(const DenseGraph &g)
{
	const auto words = g.words();
	for (Vertex a = 0; a < g.size(); ++a) {
		auto ra = g.row(a);
		std::optional<Tuple> found;
		for_each_bit(ra, [&](Vertex b) {
			if (found)
				return;
			auto rb = g.row(b);
			for_each_bit(rb, [&](Vertex c) {
				if (found || c == a || g.adjacent(a, c))
					return;
				auto rc = g.row(c);
				for (std::size_t w = 0; w < words; ++w) {
					auto cand = rc[w] & ~ra[w] & ~rb[w];
					if (w == (b >> 6))
						cand &= ~(DenseGraph::Word{1} << (b & 63));
					if (cand) {
						found = Tuple{a, b, c, static_cast<Vertex>(w * 64 + std::countr_zero(cand))};
						return;
					}
				}
			});
		});
		if (found)
			return found;
	}
	return std::nullopt;
}

// Lexicographically smallest paw (x y z / w): triangle xyz, w adjacent to x only.
std::optional<Tuple> min_paw(const DenseGraph &g)
{
	const auto words = g.words();
	std::vector<DenseGraph::Word> away(words);
	for (Vertex x = 0; x < g.size(); ++x) {
		auto rx = g.row(x);
		std::optional<Tuple> found;
		for_each_bit(rx, [&](Vertex y) {
			if (found)
				return;
			auto ry = g.row(y);
			bool any = false;
			for (std::size_t w = 0; w < words; ++w) {
				away[w] = rx[w] & ~ry[w];
				any |= away[w] != 0;
			}
			away[y >> 6] &= ~(DenseGraph::Word{1} << (y & 63));
			any = std::any_of(away.begin(), away.end(), [](auto w) { return w != 0; });
			if (!any)
				return;
			for_each_bit(ry, [&](Vertex z) {
				if (found || z <= y || !g.adjacent(x, z))
					return;
				auto rz = g.row(z);
				for (std::size_t w = 0; w < words; ++w) {
					const auto cand = away[w] & ~rz[w];
					if (cand) {
						found = Tuple{x, y, z, static_cast<Vertex>(w * 64 + std::countr_zero(cand))};
						return;
					}
				}
			});
		});
		if (found)
			return found;
	}
	return std::nullopt;
}

// Same searches over sorted adjacency lists, for components too large for a
// bit matrix.
std::optional<Tuple> min_p4(const Graph &g)
{
	for (Vertex a = 0; a < g.num_vertices(); ++a)
		for (Vertex b : g.neighbors(a))
			for (Vertex c : g.neighbors(b)) {
				if (c == a || g.has_edge(a, c))
					continue;
				for (Vertex d : g.neighbors(c))
					if (d != b && !g.has_edge(d, a) && !g.has_edge(d, b))
						return Tuple{a, b, c, d};
			}
	return std::nullopt;
}

std::optional<Tuple> min_paw(const Graph &g)
{
	for (Vertex x = 0; x < g.num_vertices(); ++x)
		for (Vertex y : g.neighbors(x))
			for (Vertex z : g.neighbors(y)) {
				if (z <= y || !g.has_edge(x, z))
					continue;
				for (Vertex w : g.neighbors(x))
					if (w != y && w != z && !g.has_edge(w, y) && !g.has_edge(w, z))
						return Tuple{x, y, z, w};
			}
	return std::nullopt;
}

enum class Trouble { none, p4, paw, k_minus_e };

struct ComponentInfo {
	std::size_t node;
	Trouble trouble = Trouble::none;
};

bool subtree_has_prime(const MDTree &t, std::size_t i)
{
	std::vector<std::size_t> stack{i};
	while (!stack.empty()) {
		const auto &nd = t.node(stack.back());
		stack.pop_back();
		if (nd.kind == NodeKind::prime)
			return true;
		stack.insert(stack.end(), nd.children.begin(), nd.children.end());
	}
	return false;
}

Trouble component_trouble(const MDTree &t, std::size_t node, int l)
{
	const auto &nd = t.node(node);
	if (nd.kind == NodeKind::leaf)
		return Trouble::none;
	if (subtree_has_prime(t, node))
		return Trouble::p4;
	// Connected cograph on >= 2 vertices: series root. Its children are leaves
	// or parallel nodes; a parallel child with a non-leaf child carries an edge.
	bool big_class = false;
	for (auto c : nd.children) {
		const auto &child = t.node(c);
		if (child.kind == NodeKind::leaf)
			continue;
		big_class = true;
		for (auto cc : child.children)
			if (t.node(cc).kind != NodeKind::leaf)
				return Trouble::paw;
	}
	if (big_class && nd.children.size() >= static_cast<std::size_t>(l) + 1)
		return Trouble::k_minus_e;
	return Trouble::none;
}

Tuple search_component(const Graph &g, const VertexSet &members, Trouble kind)
{
	Graph sub = induced_subgraph(g, members);
	std::optional<Tuple> local;
	if (sub.num_vertices() <= dense_limit) {
		DenseGraph dense(sub);
		local = kind == Trouble::p4 ? min_p4(dense) : min_paw(dense);
	} else {
		local = kind == Trouble::p4 ? min_p4(sub) : min_paw(sub);
	}
	if (!local)
		throw InvariantViolation("decomposition reports a forbidden subgraph that the search did not find");
	for (auto &v : *local)
		v = members[v];
	return *local;
}

// K_{l+2}-e in a complete multipartite component: the smallest vertex of a
// class with two or more members, its next classmate, and the smallest
// vertices of the l classes with the smallest minima among the others.
Tuple min_k_minus_e(const MDTree &t, std::size_t node, int l)
{
	std::vector<VertexSet> classes;
	for (auto c : t.node(node).children)
		classes.push_back(t.members(c));
	std::size_t chosen = classes.size();
	for (std::size_t i = 0; i < classes.size(); ++i)
		if (classes[i].size() >= 2 && (chosen == classes.size() || classes[i].front() < classes[chosen].front()))
			chosen = i;
	Tuple out{classes[chosen][0], classes[chosen][1]};
	std::vector<Vertex> mins;
	for (std::size_t i = 0; i < classes.size(); ++i)
		if (i != chosen)
			mins.push_back(classes[i].front());
	std::sort(mins.begin(), mins.end());
	out.insert(out.end(), mins.begin(), mins.begin() + l);
	return out;
}

} // namespace

std::optional<Witness> find_forbidden(const Graph &g, int l)
{
	if (g.num_vertices() == 0)
		return std::nullopt;
	const MDTree t = decompose(g);

	std::vector<std::size_t> component_nodes;
	if (t.node(t.root()).kind == NodeKind::parallel)
		component_nodes = t.node(t.root()).children;
	else
		component_nodes = {t.root()};

	Trouble worst = Trouble::none;
	std::vector<ComponentInfo> infos;
	for (auto node : component_nodes) {
		auto trouble = component_trouble(t, node, l);
		infos.push_back({node, trouble});
		if (trouble != Trouble::none && (worst == Trouble::none || trouble < worst))
			worst = trouble;
	}
	if (worst == Trouble::none)
		return std::nullopt;

	std::optional<Tuple> best;
	for (const auto &info : infos) {
		if (info.trouble != worst)
			continue;
		Tuple candidate = worst == Trouble::k_minus_e ? min_k_minus_e(t, info.node, l)
		                                              : search_component(g, t.members(info.node), worst);
		if (!best || candidate < *best)
			best = std::move(candidate);
	}
	const WitnessKind kind = worst == Trouble::p4    ? WitnessKind::p4
	                         : worst == Trouble::paw ? WitnessKind::paw
	                                                 : WitnessKind::k_minus_e;
	return Witness{kind, std::move(*best)};
}

bool is_member(const DenseGraph &g, Family family, int l)
{
	if (family == Family::bicluster) {
		family = Family::kl_cluster;
		l = 2;
	}
	const auto n = g.size();
	const auto words = g.words();
	std::vector<DenseGraph::Word> assigned(words, 0), comp(words), cls(words);
	std::vector<Vertex> stack;

	for (Vertex s = 0; s < n; ++s) {
		if ((assigned[s >> 6] >> (s & 63)) & 1)
			continue;
		// Component of s.
		std::fill(comp.begin(), comp.end(), 0);
		comp[s >> 6] |= DenseGraph::Word{1} << (s & 63);
		stack.assign(1, s);
		std::size_t size = 0;
		while (!stack.empty()) {
			Vertex u = stack.back();
			stack.pop_back();
			++size;
			auto ru = g.row(u);
			for (std::size_t w = 0; w < words; ++w) {
				auto fresh = ru[w] & ~comp[w];
				comp[w] |= fresh;
				for_each_bit(std::span<const DenseGraph::Word>(&fresh, 1),
				             [&](Vertex b) { stack.push_back(static_cast<Vertex>(w * 64 + b)); });
			}
		}
		for (std::size_t w = 0; w < words; ++w)
			assigned[w] |= comp[w];

		// Classes: non-neighbours within the component, which must coincide for
		// all members of a class in a complete multipartite graph.
		std::vector<DenseGraph::Word> done(words, 0);
		std::size_t classes = 0;
		bool multipartite = true;
		bool all_singletons = true;
		for_each_bit(comp, [&](Vertex u) {
			if (!multipartite || ((done[u >> 6] >> (u & 63)) & 1))
				return;
			auto ru = g.row(u);
			for (std::size_t w = 0; w < words; ++w)
				cls[w] = comp[w] & ~ru[w];
			std::size_t members = 0;
			for_each_bit(cls, [&](Vertex x) {
				++members;
				auto rx = g.row(x);
				for (std::size_t w = 0; w < words; ++w)
					if ((comp[w] & ~rx[w]) != cls[w])
						multipartite = false;
			});
			for (std::size_t w = 0; w < words; ++w)
				done[w] |= cls[w];
			++classes;
			all_singletons &= members == 1;
		});
		const bool clique = multipartite && all_singletons;
		const bool l_clique = multipartite && classes <= static_cast<std::size_t>(l) && (classes >= 2 || size == 1);
		switch (family) {
		case Family::cluster:
			if (!clique)
				return false;
			break;
		case Family::l_cluster:
			if (!clique && !l_clique)
				return false;
			break;
		case Family::kl_cluster:
		case Family::bicluster:
			if (!l_clique)
				return false;
			break;
		}
	}
	return true;
}

} // namespace mced
