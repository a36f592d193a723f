#include "mced/kernelization.hpp"

#include <algorithm>
#include <sstream>

#include "mced/dense_graph.hpp"
#include "mced/errors.hpp"
#include "mced/graph_io.hpp"

namespace mced {

std::size_t kernel_size_bound(int l, int k)
{
	const auto L = static_cast<std::size_t>(l);
	const auto K = static_cast<std::size_t>(k);
	return 2 * L * K * (K + 2) + 2 * K * (L + K + 1);
}

namespace {

struct Kept {
	Graph graph;
	std::vector<Vertex> map;
};

Kept keep_vertices(const Graph &g, const std::vector<char> &keep)
{
	Kept out;
	for (Vertex v = 0; v < g.num_vertices(); ++v)
		if (keep[v])
			out.map.push_back(v);
	out.graph = induced_subgraph(g, out.map);
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

TrivialRemoval remove_trivial_components(const Graph &g, int l)
{
	TrivialRemoval out;
	std::vector<char> keep(g.num_vertices(), 1);
	for (auto &comp : connected_components(g)) {
		if (classify_component(g, comp, l).tag == ComponentClass::Tag::other)
			continue;
		for (Vertex v : comp)
			keep[v] = 0;
		out.removed.push_back(std::move(comp));
	}
	auto kept = keep_vertices(g, keep);
	out.graph = std::move(kept.graph);
	out.vertex_map = std::move(kept.map);
	return out;
}

FilterResult quotient_size_filter(const Graph &g, int l, int k)
{
	check_parameters(l, k);
	FilterResult out;
	out.counts = count_kinds(q_quotient(g));
	out.components = connected_components(g).size();
	const auto L = static_cast<std::size_t>(l);
	const auto K = static_cast<std::size_t>(k);
	if (out.counts.total() > (2 * L + 2) * K)
		out.reason = "quotient bound (2ℓ+2)k exceeded";
	else if (out.counts.p > 2 * L * K)
		out.reason = "P-vertex bound 2ℓk exceeded";
	else if (out.counts.s > 2 * K)
		out.reason = "S-vertex bound 2k exceeded";
	else if (out.components > 2 * K)
		out.reason = "component bound 2k exceeded";
	out.pass = out.reason.empty();
	return out;
}

Truncation truncate_modules(const Graph &g, int l, int k)
{
	check_parameters(l, k);
	Truncation out;
	std::vector<char> keep(g.num_vertices(), 1);
	const auto p_limit = static_cast<std::size_t>(k) + 2;
	const auto s_limit = static_cast<std::size_t>(l) + static_cast<std::size_t>(k) + 1;
	for (auto &qv : q_quotient(g).vertices) {
		const std::size_t limit = qv.kind == PartKind::P ? p_limit : qv.kind == PartKind::S ? s_limit : qv.members.size();
		if (qv.members.size() <= limit)
			continue;
		for (std::size_t i = limit; i < qv.members.size(); ++i)
			keep[qv.members[i]] = 0;
		out.vertices_removed += qv.members.size() - limit;
		out.log.push_back({qv.kind, std::move(qv.members), limit});
	}
	auto kept = keep_vertices(g, keep);
	out.graph = std::move(kept.graph);
	out.vertex_map = std::move(kept.map);
	return out;
}

const char *to_string(KernelStatus s)
{
	switch (s) {
	case KernelStatus::kernel:
		return "kernel";
	case KernelStatus::no:
		return "no";
	case KernelStatus::trivially_yes:
		return "trivially-yes";
	}
	return "?";
}

KernelResult kernelize(const Graph &g, int l, int k)
{
	check_parameters(l, k);
	KernelResult out;
	auto trivial = remove_trivial_components(g, l);
	out.stats.components_removed = trivial.removed.size();
	if (trivial.graph.num_vertices() == 0) {
		out.status = KernelStatus::trivially_yes;
		out.graph = std::move(trivial.graph);
		return out;
	}

	const auto filter = quotient_size_filter(trivial.graph, l, k);
	out.stats.quotient_size = filter.counts.total();
	out.stats.counts = filter.counts;
	if (!filter.pass) {
		out.status = KernelStatus::no;
		out.reason = filter.reason;
		return out;
	}

	auto truncated = truncate_modules(trivial.graph, l, k);
	out.stats.vertices_truncated = truncated.vertices_removed;
	out.vertex_map.reserve(truncated.vertex_map.size());
	for (Vertex v : truncated.vertex_map)
		out.vertex_map.push_back(trivial.vertex_map[v]);
	out.graph = std::move(truncated.graph);
	if (out.graph.num_vertices() > kernel_size_bound(l, k))
		throw InvariantViolation("kernel has " + std::to_string(out.graph.num_vertices()) + " vertices, bound is " +
		                         std::to_string(kernel_size_bound(l, k)));
	return out;
}

std::string kernel_report(const KernelResult &r, int l, int k)
{
	std::ostringstream out;
	out << "status=" << to_string(r.status) << '\n';
	if (r.status == KernelStatus::no)
		out << "reason=" << r.reason << '\n';
	out << "l=" << l << '\n' << "k=" << k << '\n';
	out << "components_removed=" << r.stats.components_removed << '\n';
	out << "quotient_size=" << r.stats.quotient_size << '\n';
	out << "quotient_u=" << r.stats.counts.u << '\n';
	out << "quotient_p=" << r.stats.counts.p << '\n';
	out << "quotient_s=" << r.stats.counts.s << '\n';
	out << "bound_quotient=" << (2 * l + 2) * k << '\n';
	out << "bound_p=" << 2 * l * k << '\n';
	out << "bound_s=" << 2 * k << '\n';
	out << "bound_kernel=" << kernel_size_bound(l, k) << '\n';
	if (r.status != KernelStatus::kernel)
		return out.str();
	out << "vertices_truncated=" << r.stats.vertices_truncated << '\n';
	out << "kernel_vertices=" << r.graph.num_vertices() << '\n';
	out << "kernel_edges=" << r.graph.num_edges() << '\n';
	out << serialize_graph(r.graph);
	out << "# vertex_map\n";
	for (std::size_t i = 0; i < r.vertex_map.size(); ++i)
		out << "# " << i << ' ' << r.vertex_map[i] << '\n';
	return out.str();
}

namespace {

WeightedQuotientInstance weighted_quotient(const Graph &g, bool group_series)
{
	const MDTree t = decompose(g);
	auto q = quotient_graph(g, group_series ? s_partition(t) : p_partition(t));
	return {std::move(q.vertices), std::move(q.adjacency)};
}

} // namespace

WeightedQuotientInstance build_weighted_s_quotient(const Graph &g) { return weighted_quotient(g, true); }

WeightedQuotientInstance build_weighted_p_quotient(const Graph &g) { return weighted_quotient(g, false); }

std::optional<std::uint64_t> weighted_min_cost(const WeightedQuotientInstance &q, Family family, std::uint64_t budget)
{
	if (family != Family::cluster && family != Family::bicluster)
		throw PreconditionError("weighted quotients support the cluster and bicluster families only");
	const std::size_t n = q.size();
	std::vector<std::pair<Vertex, Vertex>> pairs;
	std::vector<std::uint64_t> weights;
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j) {
			pairs.emplace_back(i, j);
			weights.push_back(q.weight(i, j));
		}
	if (pairs.size() > 64)
		throw ResourceLimit("weighted quotient too large for exhaustive search");

	DenseGraph state(q.adjacency);
	std::optional<std::uint64_t> best;
	// Depth-first over toggle sets in pair order, pruned by remaining budget.
	auto search = [&](auto &&self, std::size_t from, std::uint64_t spent) -> void {
		if (best && spent >= *best)
			return;
		if (is_member(state, family, 2)) {
			best = spent;
			return;
		}
		for (std::size_t i = from; i < pairs.size(); ++i) {
			if (spent + weights[i] > budget || (best && spent + weights[i] >= *best))
				continue;
			state.toggle(pairs[i].first, pairs[i].second);
			self(self, i + 1, spent + weights[i]);
			state.toggle(pairs[i].first, pairs[i].second);
		}
	};
	search(search, 0, 0);
	return best;
}

} // namespace mced
