#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mced/graph.hpp"

namespace mced {

/// Label of a node of the modular decomposition tree. `parallel` (P) nodes
/// induce a disconnected graph, `series` (S) nodes a graph with disconnected
/// complement, and `prime` (N) nodes the remaining strong modules.
enum class NodeKind { leaf, parallel, series, prime };

char kind_letter(NodeKind kind);

struct MDNode {
	NodeKind kind = NodeKind::leaf;
	Vertex vertex = 0;                 // only meaningful for leaves
	Vertex min_vertex = 0;             // smallest vertex in the module
	std::size_t size = 1;              // module cardinality
	std::vector<std::size_t> children; // ordered by min_vertex
};

/// Modular decomposition tree. Nodes are the strong modules of the graph;
/// children of every node are ordered by their smallest vertex, which makes
/// the tree canonical. The empty graph has an empty tree.
class MDTree {
public:
	MDTree() = default;
	MDTree(std::vector<MDNode> nodes, std::size_t root) : nodes_(std::move(nodes)), root_(root) {}

	bool empty() const noexcept { return nodes_.empty(); }
	std::size_t root() const noexcept { return root_; }
	std::size_t num_nodes() const noexcept { return nodes_.size(); }
	const MDNode &node(std::size_t i) const { return nodes_[i]; }
	const std::vector<MDNode> &nodes() const noexcept { return nodes_; }

	/// Sorted vertex set of the module represented by node i.
	VertexSet members(std::size_t i) const;

	/// True iff some node is labelled prime.
	bool has_prime_node() const;

private:
	std::vector<MDNode> nodes_;
	std::size_t root_ = 0;
};

/// Modular decomposition of g.
///
/// Recursive: a disconnected module becomes a P node over its components,
/// a co-disconnected one an S node over its co-components, and a prime
/// module is split into its maximal proper modules by vertex-partition
/// refinement. Worst case is super-linear on deeply nested inputs; on
/// sparse graphs with small prime modules it behaves near-linearly.
MDTree decompose(const Graph &g);

/// Indented text form, one node per line: label then ascending members.
std::string to_text(const MDTree &t);
std::string to_dot(const MDTree &t);

// ---------------------------------------------------------------------------
// Quotient graphs

/// A part of a congruence partition. `origin` is the kind of the tree node
/// whose leaf children were grouped; `leaf` when the part is the root leaf.
struct Part {
	VertexSet members;
	NodeKind origin = NodeKind::leaf;
};

using Partition = std::vector<Part>;

/// Q-partition: the leaf children of each P or S node form one part, leaf
/// children of N nodes are singleton parts. Parts are ordered by their
/// smallest member.
Partition q_partition(const MDTree &t);

/// Groups leaf children of S nodes only; every other vertex is a singleton.
Partition s_partition(const MDTree &t);

/// Groups leaf children of P nodes only; every other vertex is a singleton.
Partition p_partition(const MDTree &t);

enum class PartKind { U, P, S };

char part_letter(PartKind kind);

struct QuotientVertex {
	PartKind kind;
	VertexSet members;
};

/// Quotient G/Π. Vertex i of `adjacency` is vertices[i].
struct QuotientGraph {
	std::vector<QuotientVertex> vertices;
	Graph adjacency;
};

/// Builds the quotient of g by `parts`. A part with at least two members is a
/// P-vertex when it came from a P node and an S-vertex when it came from an S
/// node; singletons are U-vertices. Throws InvariantViolation when a part is
/// not a module, is typed inconsistently with its induced subgraph, or the
/// parts do not partition V(g).
QuotientGraph quotient_graph(const Graph &g, const Partition &parts);

struct KindCounts {
	std::size_t u = 0;
	std::size_t p = 0;
	std::size_t s = 0;

	std::size_t total() const noexcept { return u + p + s; }
	friend bool operator==(const KindCounts &, const KindCounts &) = default;
};

KindCounts count_kinds(const QuotientGraph &q);

/// Convenience: quotient_graph(g, q_partition(decompose(g))).
QuotientGraph q_quotient(const Graph &g);

std::string to_text(const QuotientGraph &q);
std::string to_dot(const QuotientGraph &q);

} // namespace mced
