#pragma once

// Naive reference implementations used only by the tests. Each one follows a
// definition directly and is independent of the library algorithms it checks.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mced/graph.hpp"

namespace mced::oracle {

/// Pair index layout for small graphs: (0,1),(0,2),..,(0,n-1),(1,2),...
std::vector<Edge> pair_list(std::size_t n);

Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Calls f on every labelled graph with n vertices (2^C(n,2) of them).
void for_each_labelled_graph(std::size_t n, const std::function<void(const Graph &)> &f);

/// One representative per isomorphism class on exactly n vertices (n <= 7),
/// grown by vertex augmentation and canonicalised by minimum relabelling.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

/// G(n,p) sample from the given engine.
Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng);

/// Modular decomposition tree obtained by listing all 2^n vertex subsets,
/// keeping the strong modules and nesting them by containment. Rendered in
/// the same indented text form as the library's tree printer.
std::string brute_md_text(const Graph &g);

/// Scans every 4-subset for an induced P4 or paw and every (l+2)-subset for
/// an induced K_{l+2}-e.
bool has_forbidden_subset(const Graph &g, int l);

/// Definition check: every component is a clique, or admits a proper
/// colouring with between 2 and l colour classes that makes it complete
/// multipartite. Colourings are enumerated exhaustively.
bool definitional_l_cluster(const Graph &g, int l);

} // namespace mced::oracle
