#include "mced/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "mced/errors.hpp"
#include "mced/random.hpp"
#include "mced/recognition.hpp"
#include "mced/solver.hpp"

namespace mced {

Gadget build_kl_gadget(const Graph &g, int l)
{
	if (l < 2)
		throw PreconditionError("l must be at least 2");
	for (Vertex v = 0; v < g.num_vertices(); ++v)
		if (g.degree(v) == 0)
			throw PreconditionError("vertex " + std::to_string(v) + " forms a trivial component");
	Gadget out;
	out.map = {l, g.num_vertices()};
	std::vector<Edge> edges;
	for (Vertex i = 0; i < g.num_vertices(); ++i)
		for (int p = 1; p <= l; ++p)
			for (int q = p + 1; q <= l; ++q)
				edges.emplace_back(out.map.vertex(i, p), out.map.vertex(i, q));
	for (auto [i, j] : g.edges())
		for (int p = 1; p <= l; ++p)
			for (int q = 1; q <= l; ++q)
				if (p != q)
					edges.emplace_back(out.map.vertex(i, p), out.map.vertex(j, q));
	out.graph = Graph::from_edges(g.num_vertices() * static_cast<std::size_t>(l), edges);
	return out;
}

GadgetCheck check_gadget_optimum(const Graph &g, int l)
{
	const Gadget gadget = build_kl_gadget(g, l);
	GadgetCheck out;
	out.opt_cluster = exact_edit_distance(g, Family::cluster, 2);
	out.opt_gadget = exact_edit_distance(gadget.graph, Family::kl_cluster, l);
	out.ratio_ok = out.opt_gadget == static_cast<std::size_t>(l * (l - 1)) * out.opt_cluster;
	return out;
}

namespace {

std::uint64_t pair_key(Vertex a, Vertex b)
{
	if (a > b)
		std::swap(a, b);
	return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

PlantedInstance gen_planted(std::size_t num_clusters, const std::vector<std::size_t> &sizes, int l,
                            std::size_t noise_edits, std::uint64_t seed)
{
	if (l < 2)
		throw PreconditionError("l must be at least 2");
	if (sizes.size() != 1 && sizes.size() != num_clusters)
		throw PreconditionError("give one size per cluster or a single size for all");
	Rng rng(seed);
	std::size_t n = 0;
	for (std::size_t c = 0; c < num_clusters; ++c) {
		const auto s = sizes.size() == 1 ? sizes[0] : sizes[c];
		if (s == 0)
			throw PreconditionError("cluster sizes must be positive");
		n += s;
	}

	std::vector<Vertex> label(n);
	std::iota(label.begin(), label.end(), Vertex{0});
	rng.shuffle(label.begin(), label.end());

	std::vector<Edge> edges;
	std::size_t base = 0;
	std::vector<std::size_t> cls;
	for (std::size_t c = 0; c < num_clusters; ++c) {
		const auto s = sizes.size() == 1 ? sizes[0] : sizes[c];
		const auto r_max = std::min<std::size_t>(static_cast<std::size_t>(l), s);
		cls.assign(s, 0);
		if (r_max >= 2 && rng.coin(0.5)) {
			// Complete r-partite: r distinct seeds for the classes, the rest random.
			const auto r = rng.between(2, r_max);
			for (std::size_t i = 0; i < s; ++i)
				cls[i] = i < r ? i : rng.below(r);
			rng.shuffle(cls.begin(), cls.end());
		} else {
			std::iota(cls.begin(), cls.end(), std::size_t{0});
		}
		for (std::size_t i = 0; i < s; ++i)
			for (std::size_t j = i + 1; j < s; ++j)
				if (cls[i] != cls[j])
					edges.emplace_back(label[base + i], label[base + j]);
		base += s;
	}

	const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0)) / 2;
	if (noise_edits > pairs)
		throw PreconditionError("more noise edits than vertex pairs");
	std::unordered_set<std::uint64_t> present;
	present.reserve(edges.size() * 2);
	for (auto [a, b] : edges)
		present.insert(pair_key(a, b));
	std::unordered_set<std::uint64_t> toggled;
	while (toggled.size() < noise_edits) {
		const auto a = static_cast<Vertex>(rng.below(n));
		const auto b = static_cast<Vertex>(rng.below(n));
		if (a == b)
			continue;
		const auto key = pair_key(a, b);
		if (!toggled.insert(key).second)
			continue;
		if (!present.erase(key))
			present.insert(key);
	}
	std::vector<Edge> noisy;
	noisy.reserve(present.size());
	for (auto key : present)
		noisy.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
	std::sort(noisy.begin(), noisy.end());
	return {Graph::from_edges(n, noisy), noise_edits};
}

PlantedInstance gen_planted_order(std::size_t n, const std::vector<std::size_t> &size_cycle, int l,
                                  std::size_t noise_edits, std::uint64_t seed)
{
	if (size_cycle.empty() || std::find(size_cycle.begin(), size_cycle.end(), 0) != size_cycle.end())
		throw PreconditionError("cluster sizes must be positive");
	std::vector<std::size_t> sizes;
	for (std::size_t total = 0, i = 0; total < n; ++i) {
		const auto s = std::min(size_cycle[i % size_cycle.size()], n - total);
		sizes.push_back(s);
		total += s;
	}
	return gen_planted(sizes.size(), sizes, l, noise_edits, seed);
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed)
{
	if (!(p >= 0.0 && p <= 1.0))
		throw PreconditionError("edge probability must lie in [0,1]");
	Rng rng(seed);
	std::vector<Edge> edges;
	if (p <= 0.0 || n < 2)
		return Graph::from_edges(n, edges);
	const double log_q = std::log1p(-p);
	// Walk pairs (v,w), w < v, row by row, skipping geometric gaps.
	std::int64_t v = 1, w = -1;
	const auto N = static_cast<std::int64_t>(n);
	while (v < N) {
		std::int64_t skip = 0;
		if (p < 1.0)
			skip = static_cast<std::int64_t>(std::floor(std::log1p(-rng.unit()) / log_q));
		w += 1 + skip;
		while (w >= v && v < N) {
			w -= v;
			++v;
		}
		if (v < N)
			edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
	}
	return Graph::from_edges(n, edges);
}

Graph gen_l_partite(std::size_t n, int l, double p, std::uint64_t seed)
{
	if (l < 2)
		throw PreconditionError("l must be at least 2");
	Rng rng(seed);
	std::vector<std::uint64_t> cls(n);
	for (auto &c : cls)
		c = rng.below(static_cast<std::uint64_t>(l));
	std::vector<Edge> edges;
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j)
			if (cls[i] != cls[j] && rng.coin(p))
				edges.emplace_back(i, j);
	return Graph::from_edges(n, edges);
}

} // namespace mced
