#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "mced/graph.hpp"

namespace mced {

enum class EditSign : char { add = '+', remove = '-' };

/// One signed pair toggle; endpoints are normalized so that u < v.
struct Edit {
	EditSign sign;
	Vertex u;
	Vertex v;

	Edit(EditSign s, Vertex a, Vertex b);

	Edge pair() const { return {u, v}; }
	friend bool operator==(const Edit &, const Edit &) = default;
};

/// Ordered edition set. Each unordered pair appears at most once; insertion
/// order is kept so that edit orderings can be inspected.
class EditSet {
public:
	EditSet() = default;
	EditSet(std::initializer_list<Edit> edits);

	/// Appends; throws InvalidEdit if the pair is already present.
	void push_back(const Edit &e);

	bool contains_pair(Vertex a, Vertex b) const;

	std::size_t size() const noexcept { return edits_.size(); }
	bool empty() const noexcept { return edits_.empty(); }
	const Edit &operator[](std::size_t i) const { return edits_[i]; }
	auto begin() const { return edits_.begin(); }
	auto end() const { return edits_.end(); }

	/// Flips every sign: the set that undoes this one.
	EditSet negated() const;

	friend bool operator==(const EditSet &a, const EditSet &b) { return a.edits_ == b.edits_; }

private:
	std::vector<Edit> edits_;
	std::set<Edge> pairs_;
};

/// The edit that toggles pair {a,b} in g.
Edit toggle_of(const Graph &g, Vertex a, Vertex b);

/// G+F. Throws InvalidEdit naming the pair when a sign does not match g.
Graph apply_edits(const Graph &g, const EditSet &f);

} // namespace mced
