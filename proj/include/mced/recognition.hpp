#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mced/dense_graph.hpp"
#include "mced/graph.hpp"

namespace mced {

enum class WitnessKind { p4, paw, k_minus_e };

/// A forbidden induced subgraph.
///
/// Vertex order: P4 in path order a-b-c-d; paw as triangle x y z followed by
/// the pendant w, which hangs off x; K_{l+2}-e with the non-adjacent pair
/// (a,b) first and the remaining l vertices after it.
struct Witness {
	WitnessKind kind;
	std::vector<Vertex> vertices;

	friend bool operator==(const Witness &, const Witness &) = default;
};

/// "P4: a b c d", "PAW: x y z / w", "KME: a b | r1 r2 ...".
std::string to_string(const Witness &w);

/// Checks that the listed vertices induce exactly the named graph in g.
bool is_valid_witness(const Graph &g, const Witness &w, int l);

struct ComponentClass {
	enum class Tag { clique, l_clique, other };

	Tag tag = Tag::other;
	std::size_t clique_size = 0;         // for cliques
	std::vector<std::size_t> part_sizes; // for l-cliques, ascending

	friend bool operator==(const ComponentClass &, const ComponentClass &) = default;
};

/// Classifies a connected component as a clique, an l-clique (connected
/// complete r-partite, 2 <= r <= l) or neither. Cliques are reported as
/// cliques even when they are also l-cliques. Throws PreconditionError when
/// `comp` is not a connected component of g.
ComponentClass classify_component(const Graph &g, std::span<const Vertex> comp, int l);

/// True iff g is a disjoint union of cliques and l-cliques.
bool is_l_cluster_graph(const Graph &g, int l);

/// A forbidden induced subgraph of g, or nothing when g is an L-cluster graph.
///
/// Kinds are tried in the order P4, paw, K_{l+2}-e; the modular decomposition
/// tells which kinds occur and in which components. Among witnesses of the
/// chosen kind the lexicographically smallest vertex list is returned.
std::optional<Witness> find_forbidden(const Graph &g, int l);

/// Target families of the editing problems handled by the oracles.
enum class Family {
	l_cluster,  // cliques and l-cliques
	cluster,    // cliques
	kl_cluster, // l-cliques only (a single vertex is an l-clique)
	bicluster,  // kl_cluster with l = 2
};

/// Membership test on a bit-matrix graph, used by the exhaustive oracles.
bool is_member(const DenseGraph &g, Family family, int l);

} // namespace mced
