#include "mced/modular_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

#include "mced/errors.hpp"

namespace mced {

char kind_letter(NodeKind kind)
{
	switch (kind) {
	case NodeKind::leaf:
		return 'L';
	case NodeKind::parallel:
		return 'P';
	case NodeKind::series:
		return 'S';
	case NodeKind::prime:
		return 'N';
	}
	return '?';
}

char part_letter(PartKind kind)
{
	switch (kind) {
	case PartKind::U:
		return 'U';
	case PartKind::P:
		return 'P';
	case PartKind::S:
		return 'S';
	}
	return '?';
}

VertexSet MDTree::members(std::size_t i) const
{
	VertexSet out;
	std::vector<std::size_t> stack{i};
	while (!stack.empty()) {
		const auto &nd = nodes_[stack.back()];
		stack.pop_back();
		if (nd.kind == NodeKind::leaf)
			out.push_back(nd.vertex);
		else
			stack.insert(stack.end(), nd.children.begin(), nd.children.end());
	}
	std::sort(out.begin(), out.end());
	return out;
}

bool MDTree::has_prime_node() const
{
	return std::any_of(nodes_.begin(), nodes_.end(), [](const MDNode &nd) { return nd.kind == NodeKind::prime; });
}

namespace {

class Decomposer {
public:
	explicit Decomposer(const Graph &g)
	    : g_(g), n_(g.num_vertices()), member_(n_, 0), scratch_(n_, 0), count_(n_, 0), part_(n_, 0), pos_(n_, 0),
	      bucket_(n_)
	{
	}

	MDTree run()
	{
		if (n_ == 0)
			return {};
		std::vector<MDNode> nodes(1);
		VertexSet all(n_);
		std::iota(all.begin(), all.end(), Vertex{0});
		std::vector<std::pair<std::size_t, VertexSet>> work;
		work.emplace_back(0, std::move(all));

		while (!work.empty()) {
			auto [index, set] = std::move(work.back());
			work.pop_back();
			nodes[index].min_vertex = set.front();
			nodes[index].size = set.size();
			if (set.size() == 1) {
				nodes[index].kind = NodeKind::leaf;
				nodes[index].vertex = set.front();
				continue;
			}

			NodeKind kind;
			std::vector<VertexSet> children = split(set, kind);
			for (auto &c : children)
				std::sort(c.begin(), c.end());
			std::sort(children.begin(), children.end(),
			          [](const VertexSet &a, const VertexSet &b) { return a.front() < b.front(); });

			nodes[index].kind = kind;
			// Push in reverse so that the first child is expanded first.
			const std::size_t first = nodes.size();
			nodes.resize(first + children.size());
			for (std::size_t i = 0; i < children.size(); ++i)
				nodes[index].children.push_back(first + i);
			for (std::size_t i = children.size(); i-- > 0;)
				work.emplace_back(first + i, std::move(children[i]));
		}
		return MDTree(std::move(nodes), 0);
	}

private:
	// Maximal strong submodules of the module `set` (|set| >= 2).
	std::vector<VertexSet> split(const VertexSet &set, NodeKind &kind)
	{
		enter(set);
		auto comps = components(set);
		if (comps.size() > 1) {
			kind = NodeKind::parallel;
			return comps;
		}
		auto cocomps = co_components(set);
		if (cocomps.size() > 1) {
			kind = NodeKind::series;
			return cocomps;
		}
		kind = NodeKind::prime;
		return prime_children(set);
	}

	void enter(const VertexSet &set)
	{
		++stamp_;
		for (Vertex v : set)
			member_[v] = stamp_;
	}

	bool inside(Vertex v) const { return member_[v] == stamp_; }

	std::uint64_t fresh() { return ++scratch_stamp_; }

	std::vector<VertexSet> components(const VertexSet &set)
	{
		const auto seen = fresh();
		std::vector<VertexSet> comps;
		std::vector<Vertex> stack;
		for (Vertex s : set) {
			if (scratch_[s] == seen)
				continue;
			VertexSet comp;
			scratch_[s] = seen;
			stack.push_back(s);
			while (!stack.empty()) {
				Vertex u = stack.back();
				stack.pop_back();
				comp.push_back(u);
				for (Vertex w : g_.neighbors(u))
					if (inside(w) && scratch_[w] != seen) {
						scratch_[w] = seen;
						stack.push_back(w);
					}
			}
			comps.push_back(std::move(comp));
		}
		return comps;
	}

	// Components of the complement of G[set]: BFS over the complement, keeping
	// the not-yet-reached vertices in a list that is rescanned per step. Each
	// retained vertex is charged to an edge, each removed one to itself.
	std::vector<VertexSet> co_components(const VertexSet &set)
	{
		std::vector<Vertex> unvisited(set.begin(), set.end());
		std::vector<Vertex> keep;
		std::vector<VertexSet> comps;
		while (!unvisited.empty()) {
			VertexSet comp{unvisited.back()};
			unvisited.pop_back();
			for (std::size_t head = 0; head < comp.size() && !unvisited.empty(); ++head) {
				const Vertex u = comp[head];
				const auto adjacent = fresh();
				for (Vertex w : g_.neighbors(u))
					scratch_[w] = adjacent;
				keep.clear();
				for (Vertex w : unvisited) {
					if (scratch_[w] == adjacent)
						keep.push_back(w);
					else
						comp.push_back(w);
				}
				unvisited.swap(keep);
			}
			comps.push_back(std::move(comp));
		}
		return comps;
	}

	// ---- prime modules --------------------------------------------------

	// Children of a prime node: its maximal proper modules. With v the first
	// vertex and u any vertex outside v's maximal module M_v, the children are
	// M_v (the part of the u-partition that contains v) together with the parts
	// of the v-partition disjoint from M_v.
	std::vector<VertexSet> prime_children(const VertexSet &set)
	{
		const Vertex v = set.front();
		const Vertex u = vertex_outside_max_module(set, v);
		auto by_v = vertex_partition(set, v);
		auto by_u = vertex_partition(set, u);

		VertexSet max_v;
		for (auto &p : by_u)
			if (std::find(p.begin(), p.end(), v) != p.end()) {
				max_v = std::move(p);
				break;
			}
		if (max_v.empty())
			max_v = {v};

		const auto in_max_v = fresh();
		for (Vertex w : max_v)
			scratch_[w] = in_max_v;
		std::vector<VertexSet> children;
		children.push_back(std::move(max_v));
		for (auto &p : by_v)
			if (scratch_[p.front()] != in_max_v)
				children.push_back(std::move(p));
		return children;
	}

	// Grows S from {v} by module closure, adding candidates one at a time. The
	// first candidate whose addition closes S to the whole set is not in M_v.
	// Total cost is linear in the size of G[set] since S only grows.
	Vertex vertex_outside_max_module(const VertexSet &set, Vertex v)
	{
		const auto in_s = fresh();
		for (Vertex w : set)
			count_[w] = 0;
		std::size_t s_size = 0;
		std::vector<Vertex> full;     // outside S, adjacent to all of S
		std::vector<Vertex> splitters;
		std::vector<Vertex> next_full;

		auto add = [&](Vertex x) {
			scratch_[x] = in_s;
			++s_size;
			next_full.clear();
			for (Vertex w : g_.neighbors(x)) {
				if (!inside(w) || scratch_[w] == in_s)
					continue;
				if (++count_[w] == s_size)
					next_full.push_back(w);
				else
					splitters.push_back(w);
			}
			for (Vertex w : full)
				if (scratch_[w] != in_s && count_[w] != s_size)
					splitters.push_back(w);
			full.swap(next_full);
		};
		auto close = [&] {
			while (!splitters.empty()) {
				Vertex w = splitters.back();
				splitters.pop_back();
				if (scratch_[w] != in_s)
					add(w);
			}
		};

		add(v);
		close();
		for (Vertex candidate : set) {
			if (scratch_[candidate] == in_s)
				continue;
			add(candidate);
			close();
			if (s_size == set.size())
				return candidate;
		}
		throw InvariantViolation("prime module without a vertex outside the maximal module of its first vertex");
	}

	struct Block {
		std::size_t begin;
		std::size_t end;
		std::size_t marked;
	};

	// Maximal modules of G[set] not containing `pivot`, by partition
	// refinement. Every vertex refines all blocks but its own once; after a
	// block splits, the smaller half A refines the rest (its vertices were
	// never allowed to split their old block) and A itself is refined by all
	// outside neighbours of A. Each vertex lands in a smaller half O(log n)
	// times, giving O(n + m log n) for the module.
	std::vector<VertexSet> vertex_partition(const VertexSet &set, Vertex pivot)
	{
		elems_.clear();
		blocks_.clear();
		events_.clear();

		const auto adjacent = fresh();
		for (Vertex w : g_.neighbors(pivot))
			if (inside(w))
				scratch_[w] = adjacent;
		for (Vertex w : set)
			if (w != pivot && scratch_[w] == adjacent)
				elems_.push_back(w);
		const std::size_t split_at = elems_.size();
		for (Vertex w : set)
			if (w != pivot && scratch_[w] != adjacent)
				elems_.push_back(w);
		if (split_at > 0)
			blocks_.push_back({0, split_at, 0});
		if (split_at < elems_.size())
			blocks_.push_back({split_at, elems_.size(), 0});
		for (std::size_t b = 0; b < blocks_.size(); ++b)
			for (std::size_t i = blocks_[b].begin; i < blocks_[b].end; ++i) {
				part_[elems_[i]] = b;
				pos_[elems_[i]] = i;
			}

		std::vector<Vertex> refiner;
		auto neighbors_in_set = [&](Vertex x) {
			refiner.clear();
			for (Vertex w : g_.neighbors(x))
				if (inside(w) && w != pivot)
					refiner.push_back(w);
			return std::span<const Vertex>(refiner);
		};

		for (std::size_t i = 0; i < set.size(); ++i) {
			const Vertex w = set[i];
			if (w != pivot)
				refine(neighbors_in_set(w), part_[w]);
		}

		while (!events_.empty()) {
			VertexSet smaller = std::move(events_.front());
			events_.pop_front();

			for (Vertex a : smaller)
				refine(neighbors_in_set(a), part_[a]);

			const auto in_a = fresh();
			for (Vertex a : smaller)
				scratch_[a] = in_a;
			std::vector<Vertex> touched;
			for (Vertex a : smaller)
				for (Vertex w : g_.neighbors(a))
					if (inside(w) && w != pivot && scratch_[w] != in_a) {
						if (bucket_[w].empty())
							touched.push_back(w);
						bucket_[w].push_back(a);
					}
			for (Vertex w : touched) {
				refine(bucket_[w], no_block);
				bucket_[w].clear();
			}
		}

		std::vector<VertexSet> parts;
		parts.reserve(blocks_.size());
		for (const auto &b : blocks_)
			parts.emplace_back(elems_.begin() + b.begin, elems_.begin() + b.end);
		return parts;
	}

	static constexpr std::size_t no_block = ~std::size_t{0};

	void refine(std::span<const Vertex> by, std::size_t excluded)
	{
		touched_blocks_.clear();
		for (Vertex x : by) {
			const auto b = part_[x];
			if (b == excluded)
				continue;
			auto &blk = blocks_[b];
			if (blk.marked == 0)
				touched_blocks_.push_back(b);
			const std::size_t dest = blk.begin + blk.marked;
			const Vertex other = elems_[dest];
			std::swap(elems_[dest], elems_[pos_[x]]);
			pos_[other] = pos_[x];
			pos_[x] = dest;
			++blk.marked;
		}
		for (auto b : touched_blocks_) {
			auto &blk = blocks_[b];
			const std::size_t size = blk.end - blk.begin;
			const std::size_t marked = blk.marked;
			blk.marked = 0;
			if (marked == size)
				continue;
			// Marked prefix becomes a new block.
			const std::size_t nb = blocks_.size();
			const Block fresh_block{blk.begin, blk.begin + marked, 0};
			blocks_[b].begin += marked;
			blocks_.push_back(fresh_block);
			for (std::size_t i = fresh_block.begin; i < fresh_block.end; ++i)
				part_[elems_[i]] = nb;
			const auto &small = marked <= size - marked ? blocks_[nb] : blocks_[b];
			events_.emplace_back(elems_.begin() + small.begin, elems_.begin() + small.end);
		}
	}

	const Graph &g_;
	std::size_t n_;
	std::vector<std::uint64_t> member_;
	std::vector<std::uint64_t> scratch_;
	std::vector<std::size_t> count_;
	std::vector<std::size_t> part_;
	std::vector<std::size_t> pos_;
	std::vector<std::vector<Vertex>> bucket_;
	std::uint64_t stamp_ = 0;
	std::uint64_t scratch_stamp_ = 0;

	std::vector<Vertex> elems_;
	std::vector<Block> blocks_;
	std::vector<std::size_t> touched_blocks_;
	std::deque<VertexSet> events_;
};

void text_node(const MDTree &t, std::size_t i, int depth, std::ostringstream &out)
{
	const auto &nd = t.node(i);
	out << std::string(2 * depth, ' ');
	if (nd.kind == NodeKind::leaf) {
		out << "L: " << nd.vertex << '\n';
		return;
	}
	out << kind_letter(nd.kind) << ':';
	for (Vertex v : t.members(i))
		out << ' ' << v;
	out << '\n';
	for (auto c : nd.children)
		text_node(t, c, depth + 1, out);
}

} // namespace

MDTree decompose(const Graph &g)
{
	return Decomposer(g).run();
}

std::string to_text(const MDTree &t)
{
	std::ostringstream out;
	if (!t.empty())
		text_node(t, t.root(), 0, out);
	return out.str();
}

std::string to_dot(const MDTree &t)
{
	std::ostringstream out;
	out << "digraph md {\n";
	for (std::size_t i = 0; i < t.num_nodes(); ++i) {
		const auto &nd = t.node(i);
		out << "  n" << i << " [label=\"" << kind_letter(nd.kind) << ':';
		for (Vertex v : t.members(i))
			out << ' ' << v;
		out << "\"];\n";
		for (auto c : nd.children)
			out << "  n" << i << " -> n" << c << ";\n";
	}
	out << "}\n";
	return out.str();
}

namespace {

Partition group_leaf_children(const MDTree &t, bool group_parallel, bool group_series)
{
	Partition parts;
	if (t.empty())
		return parts;
	if (t.node(t.root()).kind == NodeKind::leaf) {
		parts.push_back({{t.node(t.root()).vertex}, NodeKind::leaf});
		return parts;
	}
	for (const auto &nd : t.nodes()) {
		if (nd.kind == NodeKind::leaf)
			continue;
		const bool group = (nd.kind == NodeKind::parallel && group_parallel) ||
		                   (nd.kind == NodeKind::series && group_series);
		Part grouped{{}, nd.kind};
		for (auto c : nd.children) {
			const auto &child = t.node(c);
			if (child.kind != NodeKind::leaf)
				continue;
			if (group)
				grouped.members.push_back(child.vertex);
			else
				parts.push_back({{child.vertex}, nd.kind});
		}
		if (!grouped.members.empty())
			parts.push_back(std::move(grouped));
	}
	for (auto &p : parts)
		std::sort(p.members.begin(), p.members.end());
	std::sort(parts.begin(), parts.end(),
	          [](const Part &a, const Part &b) { return a.members.front() < b.members.front(); });
	return parts;
}

} // namespace

Partition q_partition(const MDTree &t)
{
	return group_leaf_children(t, true, true);
}

Partition s_partition(const MDTree &t)
{
	return group_leaf_children(t, false, true);
}

Partition p_partition(const MDTree &t)
{
	return group_leaf_children(t, true, false);
}

QuotientGraph quotient_graph(const Graph &g, const Partition &parts)
{
	const auto n = g.num_vertices();
	constexpr std::size_t unassigned = ~std::size_t{0};
	std::vector<std::size_t> owner(n, unassigned);
	QuotientGraph q;
	q.vertices.reserve(parts.size());

	// Module test per part, with counters shared across parts: every outside
	// neighbour must see all members.
	std::vector<std::size_t> hits(n, 0);
	std::vector<Vertex> touched;
	auto module = [&](const VertexSet &members, std::size_t i) {
		touched.clear();
		for (Vertex v : members)
			for (Vertex w : g.neighbors(v))
				if (owner[w] != i && hits[w]++ == 0)
					touched.push_back(w);
		bool ok = true;
		for (Vertex w : touched) {
			ok = ok && hits[w] == members.size();
			hits[w] = 0;
		}
		return ok;
	};

	for (std::size_t i = 0; i < parts.size(); ++i) {
		const auto &part = parts[i];
		if (part.members.empty())
			throw InvariantViolation("empty part in partition");
		for (Vertex v : part.members) {
			if (v >= n || owner[v] != unassigned)
				throw InvariantViolation("parts do not partition the vertex set");
			owner[v] = i;
		}
		if (!module(part.members, i))
			throw InvariantViolation("part starting at vertex " + std::to_string(part.members.front()) +
			                         " is not a module");

		PartKind kind = PartKind::U;
		if (part.members.size() >= 2) {
			if (part.origin == NodeKind::parallel)
				kind = PartKind::P;
			else if (part.origin == NodeKind::series)
				kind = PartKind::S;
			else
				throw InvariantViolation("multi-vertex part must come from a P or S node");
		}
		q.vertices.push_back({kind, part.members});
	}
	for (Vertex v = 0; v < n; ++v)
		if (owner[v] == unassigned)
			throw InvariantViolation("vertex " + std::to_string(v) + " not covered by the partition");

	std::vector<std::vector<Vertex>> adj(parts.size());
	std::vector<std::size_t> seen(parts.size(), unassigned);
	for (std::size_t i = 0; i < parts.size(); ++i) {
		const auto &members = parts[i].members;
		// P-vertices are independent sets, S-vertices cliques.
		if (q.vertices[i].kind != PartKind::U) {
			std::size_t inner = 0;
			for (Vertex v : members)
				for (Vertex w : g.neighbors(v))
					inner += owner[w] == i;
			const std::size_t k = members.size();
			const bool ok = q.vertices[i].kind == PartKind::P ? inner == 0 : inner == k * (k - 1);
			if (!ok)
				throw InvariantViolation("part starting at vertex " + std::to_string(members.front()) +
				                         " does not induce the graph its kind requires");
		}
		for (Vertex w : g.neighbors(members.front())) {
			const auto j = owner[w];
			if (j != i && seen[j] != i) {
				seen[j] = i;
				adj[i].push_back(static_cast<Vertex>(j));
			}
		}
	}
	q.adjacency = Graph::from_adjacency(std::move(adj));
	return q;
}

KindCounts count_kinds(const QuotientGraph &q)
{
	KindCounts c;
	for (const auto &v : q.vertices) {
		switch (v.kind) {
		case PartKind::U:
			++c.u;
			break;
		case PartKind::P:
			++c.p;
			break;
		case PartKind::S:
			++c.s;
			break;
		}
	}
	return c;
}

QuotientGraph q_quotient(const Graph &g)
{
	return quotient_graph(g, q_partition(decompose(g)));
}

std::string to_text(const QuotientGraph &q)
{
	std::ostringstream out;
	for (std::size_t i = 0; i < q.vertices.size(); ++i) {
		out << 'q' << i << ' ' << part_letter(q.vertices[i].kind) << ':';
		for (Vertex v : q.vertices[i].members)
			out << ' ' << v;
		out << '\n';
	}
	for (auto [a, b] : q.adjacency.edges())
		out << 'q' << a << " -- q" << b << '\n';
	return out.str();
}

std::string to_dot(const QuotientGraph &q)
{
	std::ostringstream out;
	out << "graph quotient {\n";
	for (std::size_t i = 0; i < q.vertices.size(); ++i) {
		out << "  q" << i << " [label=\"" << part_letter(q.vertices[i].kind) << ':';
		for (Vertex v : q.vertices[i].members)
			out << ' ' << v;
		out << "\"];\n";
	}
	for (auto [a, b] : q.adjacency.edges())
		out << "  q" << a << " -- q" << b << ";\n";
	out << "}\n";
	return out.str();
}

} // namespace mced
