#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mced/graph.hpp"

namespace mced {

/// Mutable bit-matrix graph for small instances: the search-tree state and
/// the exhaustive oracles. Rows are packed 64 vertices per word.
class DenseGraph {
public:
	using Word = std::uint64_t;

	DenseGraph() = default;
	explicit DenseGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
	explicit DenseGraph(const Graph &g);

	std::size_t size() const noexcept { return n_; }
	std::size_t words() const noexcept { return words_; }

	bool adjacent(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }

	void set(Vertex u, Vertex v, bool on)
	{
		const Word mask = Word{1} << (v & 63);
		const Word umask = Word{1} << (u & 63);
		if (on) {
			row_(u)[v >> 6] |= mask;
			row_(v)[u >> 6] |= umask;
		} else {
			row_(u)[v >> 6] &= ~mask;
			row_(v)[u >> 6] &= ~umask;
		}
	}

	void toggle(Vertex u, Vertex v)
	{
		row_(u)[v >> 6] ^= Word{1} << (v & 63);
		row_(v)[u >> 6] ^= Word{1} << (u & 63);
	}

	std::span<const Word> row(Vertex v) const { return {bits_.data() + v * words_, words_}; }

	std::size_t degree(Vertex v) const;
	std::size_t num_edges() const;

	Graph to_graph() const;

	friend bool operator==(const DenseGraph &, const DenseGraph &) = default;

private:
	Word *row_(Vertex v) { return bits_.data() + v * words_; }

	std::size_t n_ = 0;
	std::size_t words_ = 0;
	std::vector<Word> bits_;
};

/// Calls f(v) for every set bit of `bits`, ascending.
template <typename F>
void for_each_bit(std::span<const DenseGraph::Word> bits, F &&f)
{
	for (std::size_t w = 0; w < bits.size(); ++w) {
		auto word = bits[w];
		while (word) {
			const auto bit = static_cast<Vertex>(std::countr_zero(word));
			f(static_cast<Vertex>(w * 64 + bit));
			word &= word - 1;
		}
	}
}

} // namespace mced
