#include "mced/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <thread>
#include <unordered_set>

#include "mced/dense_graph.hpp"
#include "mced/errors.hpp"

namespace mced {

std::size_t branching_bound(int l)
{
	const auto L = static_cast<std::size_t>(l);
	return (L + 2) * (L + 1) / 2;
}

namespace {

struct Counters {
	std::atomic<std::uint64_t> nodes{0};
	std::atomic<std::size_t> max_branching{0};
	std::uint64_t max_nodes = 0;

	void visit()
	{
		const auto n = ++nodes;
		if (max_nodes && n > max_nodes)
			throw ResourceLimit("search node limit of " + std::to_string(max_nodes) + " exceeded");
	}

	void branching(std::size_t b)
	{
		auto seen = max_branching.load();
		while (b > seen && !max_branching.compare_exchange_weak(seen, b)) {
		}
	}
};

struct Path {
	std::set<Edge> toggled;
	std::vector<Edit> edits;
};

class Search {
public:
	Search(int l, Counters &counters) : l_(l), counters_(counters) {}

	/// Child pairs of the node for graph h, or nothing when h is a solution.
	std::optional<std::vector<Edge>> children(const Graph &h, const Path &path)
	{
		counters_.visit();
		const auto w = find_forbidden(h, l_);
		if (!w)
			return std::nullopt;
		auto vs = w->vertices;
		std::sort(vs.begin(), vs.end());
		std::vector<Edge> pairs;
		for (std::size_t i = 0; i < vs.size(); ++i)
			for (std::size_t j = i + 1; j < vs.size(); ++j)
				if (!path.toggled.count({vs[i], vs[j]}))
					pairs.emplace_back(vs[i], vs[j]);
		if (pairs.size() > branching_bound(l_))
			throw InvariantViolation("search node with " + std::to_string(pairs.size()) + " children");
		counters_.branching(pairs.size());
		return pairs;
	}

	bool descend(const Graph &h, Edge pair, int budget, Path &path)
	{
		const Edit e = toggle_of(h, pair.first, pair.second);
		const Graph child = apply_edits(h, {e});
		path.toggled.insert(pair);
		path.edits.push_back(e);
		if (dfs(child, budget - 1, path))
			return true;
		path.toggled.erase(pair);
		path.edits.pop_back();
		return false;
	}

	bool dfs(const Graph &h, int budget, Path &path)
	{
		const auto pairs = children(h, path);
		if (!pairs)
			return true;
		if (budget == 0)
			return false;
		for (const auto &p : *pairs)
			if (descend(h, p, budget, path))
				return true;
		return false;
	}

private:
	int l_;
	Counters &counters_;
};

std::optional<std::vector<Edit>> search(const Graph &h, int l, int k, bool parallel, Counters &counters)
{
	Search root(l, counters);
	Path path;
	if (!parallel) {
		if (root.dfs(h, k, path))
			return path.edits;
		return std::nullopt;
	}

	const auto pairs = root.children(h, path);
	if (!pairs)
		return std::vector<Edit>{};
	if (k == 0)
		return std::nullopt;
	std::vector<std::optional<std::vector<Edit>>> found(pairs->size());
	std::vector<std::exception_ptr> errors(pairs->size());
	std::vector<std::thread> workers;
	for (std::size_t i = 0; i < pairs->size(); ++i)
		workers.emplace_back([&, i] {
			try {
				Search branch(l, counters);
				Path own;
				if (branch.descend(h, (*pairs)[i], k, own))
					found[i] = std::move(own.edits);
			} catch (...) {
				errors[i] = std::current_exception();
			}
		});
	for (auto &t : workers)
		t.join();
	for (std::size_t i = 0; i < pairs->size(); ++i) {
		if (errors[i])
			std::rethrow_exception(errors[i]);
		if (found[i])
			return found[i];
	}
	return std::nullopt;
}

EditSet map_edits(const std::vector<Edit> &edits, const std::vector<Vertex> &map)
{
	EditSet out;
	for (const auto &e : edits)
		out.push_back({e.sign, map[e.u], map[e.v]});
	return out;
}

void check_parameters(int l, int k)
{
	if (l < 2)
		throw PreconditionError("l must be at least 2");
	if (k < 0)
		throw PreconditionError("k must be non-negative");
}

} // namespace

SolveResult solve_bounded(const Graph &g, int l, int k, const SolveOptions &options)
{
	check_parameters(l, k);
	SolveResult out;
	Counters counters;
	counters.max_nodes = options.max_nodes;
	auto finish = [&] {
		out.nodes_explored = counters.nodes.load();
		out.max_branching = counters.max_branching.load();
		return out;
	};

	if (!options.kernelize) {
		if (auto edits = search(g, l, k, options.parallel, counters)) {
			out.yes = true;
			for (const auto &e : *edits)
				out.edits.push_back(e);
		}
		return finish();
	}

	out.kernelized = true;
	const KernelResult kernel = kernelize(g, l, k);
	out.kernel_status = kernel.status;
	out.kernel_stats = kernel.stats;
	if (kernel.status == KernelStatus::trivially_yes) {
		out.yes = true;
		return finish();
	}
	if (kernel.status == KernelStatus::no)
		return finish();

	auto edits = search(kernel.graph, l, k, options.parallel, counters);
	if (!edits)
		return finish();
	out.yes = true;
	out.edits = map_edits(*edits, kernel.vertex_map);
	if (kernel.stats.vertices_truncated == 0 || verify_solution(g, l, out.edits, k))
		return finish();

	// The kernel answer stands; rebuild a solution on the untruncated graph.
	out.lift_fallback = true;
	const auto trivial = remove_trivial_components(g, l);
	edits = search(trivial.graph, l, k, options.parallel, counters);
	if (!edits)
		throw InvariantViolation("kernel is a yes-instance but the reduced input is not");
	out.edits = map_edits(*edits, trivial.vertex_map);
	return finish();
}

OptimalResult solve_optimal(const Graph &g, int l, int max_k, const SolveOptions &options)
{
	OptimalResult out;
	for (int k = 0; k <= max_k; ++k) {
		auto r = solve_bounded(g, l, k, options);
		out.nodes_explored += r.nodes_explored;
		if (r.yes) {
			out.opt = k;
			out.edits = std::move(r.edits);
			return out;
		}
	}
	throw ResourceLimit("no solution with at most " + std::to_string(max_k) + " edits");
}

bool verify_solution(const Graph &g, int l, const EditSet &f, int k)
{
	const Graph h = apply_edits(g, f);
	return f.size() <= static_cast<std::size_t>(k) && is_l_cluster_graph(h, l);
}

std::size_t oracle_pair_limit()
{
	if (const char *env = std::getenv("MCED_MAX_ORACLE_PAIRS")) {
		char *end = nullptr;
		const auto v = std::strtoull(env, &end, 10);
		if (end != env && *end == '\0')
			return static_cast<std::size_t>(v);
	}
	return 28;
}

namespace {

// Calls f on the state after toggling every `size`-subset of pairs, in
// lexicographic order of index tuples, until f returns true.
template <typename F>
bool for_each_toggle_set(DenseGraph &state, const std::vector<Edge> &pairs, int size, std::vector<std::size_t> &pick,
                         F &&f, std::size_t from = 0)
{
	if (size == 0)
		return f();
	for (std::size_t i = from; i + static_cast<std::size_t>(size) <= pairs.size(); ++i) {
		state.toggle(pairs[i].first, pairs[i].second);
		pick.push_back(i);
		const bool stop = for_each_toggle_set(state, pairs, size - 1, pick, f, i + 1);
		pick.pop_back();
		state.toggle(pairs[i].first, pairs[i].second);
		if (stop)
			return true;
	}
	return false;
}

std::vector<Edge> all_pairs(std::size_t n)
{
	std::vector<Edge> pairs;
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j)
			pairs.emplace_back(i, j);
	return pairs;
}

} // namespace

std::optional<EditSet> brute_force_edit(const Graph &g, Family family, int l, int k)
{
	check_parameters(l, k);
	const auto pairs = all_pairs(g.num_vertices());
	if (pairs.size() > oracle_pair_limit() && k > 4)
		throw ResourceLimit("instance too large for the exhaustive oracle: " + std::to_string(pairs.size()) +
		                    " vertex pairs with k=" + std::to_string(k));
	DenseGraph state(g);
	std::vector<std::size_t> pick;
	for (int size = 0; size <= k && static_cast<std::size_t>(size) <= pairs.size(); ++size) {
		std::vector<std::size_t> hit;
		const bool found = for_each_toggle_set(state, pairs, size, pick, [&] {
			if (!is_member(state, family, l))
				return false;
			hit = pick;
			return true;
		});
		if (found) {
			EditSet f;
			for (auto i : hit)
				f.push_back(toggle_of(g, pairs[i].first, pairs[i].second));
			return f;
		}
	}
	return std::nullopt;
}

std::optional<EditSet> brute_force_oracle(const Graph &g, int l, int k)
{
	return brute_force_edit(g, Family::l_cluster, l, k);
}

std::uint64_t count_solutions(const Graph &g, Family family, int l, int size)
{
	const auto pairs = all_pairs(g.num_vertices());
	DenseGraph state(g);
	std::vector<std::size_t> pick;
	std::uint64_t count = 0;
	for_each_toggle_set(state, pairs, size, pick, [&] {
		count += is_member(state, family, l);
		return false;
	});
	return count;
}

std::size_t exact_edit_distance(const Graph &g, Family family, int l)
{
	const std::size_t n = g.num_vertices();
	if (n > 16)
		throw ResourceLimit("exact edit distance is limited to 16 vertices");
	if (family == Family::bicluster) {
		family = Family::kl_cluster;
		l = 2;
	}
	if (n == 0)
		return 0;
	constexpr long inf = std::numeric_limits<long>::max() / 4;
	const std::uint32_t full = (1u << n) - 1;
	std::vector<std::uint32_t> adj(n, 0);
	for (auto [a, b] : g.edges()) {
		adj[a] |= 1u << b;
		adj[b] |= 1u << a;
	}
	std::vector<long> edges(full + 1, 0), non_edges(full + 1, 0), w(full + 1, 0);
	for (std::uint32_t t = 1; t <= full; ++t) {
		const auto v = std::countr_zero(t);
		const auto rest = t & (t - 1);
		edges[t] = edges[rest] + std::popcount(adj[v] & rest);
		const long size = std::popcount(t);
		non_edges[t] = size * (size - 1) / 2 - edges[t];
		w[t] = edges[t] - non_edges[t];
	}

	// best_multi[t]: min over partitions of t into 2..l classes of the sum of
	// (edges - non-edges) inside classes.
	std::vector<long> best_multi(full + 1, inf);
	if (family != Family::cluster) {
		std::vector<long> prev = w, cur(full + 1);
		for (int j = 2; j <= l; ++j) {
			for (std::uint32_t t = 1; t <= full; ++t) {
				cur[t] = inf;
				const std::uint32_t low = t & (~t + 1);
				const std::uint32_t rest = t ^ low;
				for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
					const std::uint32_t cls = sub | low;
					if (cls != t && prev[t ^ cls] < inf)
						cur[t] = std::min(cur[t], w[cls] + prev[t ^ cls]);
					if (sub == 0)
						break;
				}
				best_multi[t] = std::min(best_multi[t], cur[t]);
			}
			std::swap(prev, cur);
		}
	}

	std::vector<long> inner(full + 1);
	for (std::uint32_t t = 1; t <= full; ++t) {
		const long clique = non_edges[t];
		const long multi = best_multi[t] < inf ? non_edges[t] + best_multi[t] : inf;
		if (std::popcount(t) == 1)
			inner[t] = 0;
		else if (family == Family::cluster)
			inner[t] = clique;
		else if (family == Family::l_cluster)
			inner[t] = std::min(clique, multi);
		else
			inner[t] = multi;
	}

	// Cost = sum of inner costs + edges between parts = m + sum(inner - edges).
	std::vector<long> f(full + 1, inf);
	f[0] = 0;
	for (std::uint32_t s = 1; s <= full; ++s) {
		const std::uint32_t low = s & (~s + 1);
		const std::uint32_t rest = s ^ low;
		for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
			const std::uint32_t part = sub | low;
			if (inner[part] < inf && f[s ^ part] < inf)
				f[s] = std::min(f[s], inner[part] - edges[part] + f[s ^ part]);
			if (sub == 0)
				break;
		}
	}
	return static_cast<std::size_t>(static_cast<long>(g.num_edges()) + f[full]);
}

namespace {

// Does some forbidden induced subgraph of h contain both a and b?
bool pair_in_forbidden(const Graph &h, Vertex a, Vertex b, int l)
{
	std::vector<Vertex> others;
	for (Vertex v = 0; v < h.num_vertices(); ++v)
		if (v != a && v != b)
			others.push_back(v);
	std::vector<Vertex> set;
	auto shape = [&](std::size_t &edge_count, std::vector<int> &degree) {
		edge_count = 0;
		degree.assign(set.size(), 0);
		for (std::size_t i = 0; i < set.size(); ++i)
			for (std::size_t j = i + 1; j < set.size(); ++j)
				if (h.has_edge(set[i], set[j])) {
					++edge_count;
					++degree[i];
					++degree[j];
				}
		std::sort(degree.begin(), degree.end());
	};
	std::size_t e = 0;
	std::vector<int> degree;
	for (std::size_t i = 0; i < others.size(); ++i)
		for (std::size_t j = i + 1; j < others.size(); ++j) {
			set = {a, b, others[i], others[j]};
			shape(e, degree);
			if ((e == 3 && degree == std::vector<int>{1, 1, 2, 2}) || (e == 4 && degree == std::vector<int>{1, 2, 2, 3}))
				return true;
		}
	const auto r = static_cast<std::size_t>(l) + 2;
	if (others.size() < r - 2)
		return false;
	std::vector<std::size_t> idx(r - 2);
	for (std::size_t i = 0; i < idx.size(); ++i)
		idx[i] = i;
	while (true) {
		set = {a, b};
		for (auto i : idx)
			set.push_back(others[i]);
		shape(e, degree);
		if (e == r * (r - 1) / 2 - 1)
			return true;
		std::size_t i = idx.size();
		while (i > 0 && idx[i - 1] == others.size() - idx.size() + i - 1)
			--i;
		if (i == 0)
			return false;
		++idx[i - 1];
		for (std::size_t j = i; j < idx.size(); ++j)
			idx[j] = idx[j - 1] + 1;
	}
}

} // namespace

EditSet order_edits_lemma2(const Graph &g, int l, const EditSet &f)
{
	if (f.size() > 20)
		throw ResourceLimit("edit ordering is limited to 20 edits");
	if (!verify_solution(g, l, f, static_cast<int>(f.size())))
		throw PreconditionError("edit set is not a solution");
	const std::uint32_t all = (1u << f.size()) - 1;
	for (std::uint32_t mask = 0; mask < all; ++mask) {
		EditSet subset;
		for (std::size_t i = 0; i < f.size(); ++i)
			if ((mask >> i) & 1)
				subset.push_back(f[i]);
		if (is_l_cluster_graph(apply_edits(g, subset), l))
			throw PreconditionError("edit set is not minimal: a proper subset is already a solution");
	}

	std::unordered_set<std::uint32_t> dead;
	std::vector<std::size_t> order;
	auto extend = [&](auto &&self, const Graph &h, std::uint32_t used) -> bool {
		if (used == all)
			return true;
		if (dead.count(used))
			return false;
		for (std::size_t i = 0; i < f.size(); ++i) {
			if ((used >> i) & 1 || !pair_in_forbidden(h, f[i].u, f[i].v, l))
				continue;
			order.push_back(i);
			if (self(self, apply_edits(h, {f[i]}), used | (1u << i)))
				return true;
			order.pop_back();
		}
		dead.insert(used);
		return false;
	};
	if (!extend(extend, g, 0))
		throw PreconditionError("no ordering in which every edit destroys a forbidden subgraph");
	EditSet out;
	for (auto i : order)
		out.push_back(f[i]);
	return out;
}

} // namespace mced
