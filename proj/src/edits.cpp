#include "mced/edits.hpp"

#include <algorithm>
#include <string>

#include "mced/errors.hpp"

namespace mced {

namespace {

std::string pair_text(Vertex u, Vertex v)
{
	return std::to_string(u) + " " + std::to_string(v);
}

} // namespace

Edit::Edit(EditSign s, Vertex a, Vertex b) : sign(s), u(std::min(a, b)), v(std::max(a, b))
{
	if (a == b)
		throw InvalidEdit("edit of a self-pair " + pair_text(a, b));
}

EditSet::EditSet(std::initializer_list<Edit> edits)
{
	for (const auto &e : edits)
		push_back(e);
}

void EditSet::push_back(const Edit &e)
{
	if (!pairs_.insert(e.pair()).second)
		throw InvalidEdit("pair " + pair_text(e.u, e.v) + " edited more than once");
	edits_.push_back(e);
}

bool EditSet::contains_pair(Vertex a, Vertex b) const
{
	return pairs_.contains({std::min(a, b), std::max(a, b)});
}

EditSet EditSet::negated() const
{
	EditSet out;
	for (const auto &e : edits_)
		out.push_back(Edit(e.sign == EditSign::add ? EditSign::remove : EditSign::add, e.u, e.v));
	return out;
}

Edit toggle_of(const Graph &g, Vertex a, Vertex b)
{
	return Edit(g.has_edge(a, b) ? EditSign::remove : EditSign::add, a, b);
}

Graph apply_edits(const Graph &g, const EditSet &f)
{
	const auto n = g.num_vertices();
	std::vector<std::vector<Vertex>> adj(n);
	for (Vertex v = 0; v < n; ++v)
		adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());

	for (const auto &e : f) {
		if (e.v >= n)
			throw InvalidEdit("edit " + pair_text(e.u, e.v) + " out of range");
		const bool present = g.has_edge(e.u, e.v);
		if (e.sign == EditSign::add && present)
			throw InvalidEdit("+ " + pair_text(e.u, e.v) + ": edge already present");
		if (e.sign == EditSign::remove && !present)
			throw InvalidEdit("- " + pair_text(e.u, e.v) + ": edge not present");
		if (e.sign == EditSign::add) {
			adj[e.u].push_back(e.v);
			adj[e.v].push_back(e.u);
		} else {
			std::erase(adj[e.u], e.v);
			std::erase(adj[e.v], e.u);
		}
	}
	return Graph::from_adjacency(std::move(adj));
}

} // namespace mced
