#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mced/graph.hpp"

namespace mced {

/// Vertex naming of the blown-up graph: source vertex i with superscript
/// p in 1..l becomes i*l + (p-1).
struct GadgetMap {
	int l = 2;
	std::size_t source_vertices = 0;

	Vertex vertex(Vertex i, int p) const { return i * static_cast<Vertex>(l) + static_cast<Vertex>(p - 1); }
	Vertex source(Vertex v) const { return v / static_cast<Vertex>(l); }
	int superscript(Vertex v) const { return static_cast<int>(v % static_cast<Vertex>(l)) + 1; }
};

struct Gadget {
	Graph graph;
	GadgetMap map;
};

/// Replaces every vertex v_i by a clique Q_i = {v_i^1..v_i^l} and every edge
/// v_i v_j by all pairs v_i^p v_j^q with p != q. Throws PreconditionError if g
/// has an isolated vertex.
Gadget build_kl_gadget(const Graph &g, int l);

struct GadgetCheck {
	std::size_t opt_cluster = 0;
	std::size_t opt_gadget = 0;
	bool ratio_ok = false;
};

/// Cluster editing optimum of g against the optimum of editing the gadget
/// into a disjoint union of l-cliques; ratio_ok iff the latter is l(l-1)
/// times the former. Exact; the gadget may have at most 16 vertices.
GadgetCheck check_gadget_optimum(const Graph &g, int l);

struct PlantedInstance {
	Graph graph;
	std::size_t edit_bound = 0; // the optimum is at most this
};

/// Disjoint union of `num_clusters` components with the given sizes (one
/// size repeats for all), each a clique or a complete r-partite graph with
/// 2 <= r <= l chosen at random, relabelled by a random permutation, then
/// exactly `noise_edits` distinct random pair toggles.
PlantedInstance gen_planted(std::size_t num_clusters, const std::vector<std::size_t> &sizes, int l,
                            std::size_t noise_edits, std::uint64_t seed);

/// Planted instance on exactly n vertices whose cluster sizes cycle through
/// `size_cycle`; the last cluster is cut short to fit.
PlantedInstance gen_planted_order(std::size_t n, const std::vector<std::size_t> &size_cycle, int l,
                                  std::size_t noise_edits, std::uint64_t seed);

/// Erdos-Renyi G(n,p), by geometric skipping over the pair sequence.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

/// Random l-partite graph: each vertex gets a uniform class, pairs in
/// different classes become edges with probability p.
Graph gen_l_partite(std::size_t n, int l, double p, std::uint64_t seed);

} // namespace mced
