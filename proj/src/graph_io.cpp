#include "mced/graph_io.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "mced/errors.hpp"

namespace mced {

namespace {

struct LineReader {
	std::string_view text;
	std::size_t line_no = 0;

	// Next line that is neither blank nor a comment; false at end of input.
	bool next(std::string_view &line)
	{
		while (!text.empty()) {
			auto pos = text.find('\n');
			line = text.substr(0, pos);
			text = pos == std::string_view::npos ? std::string_view{} : text.substr(pos + 1);
			++line_no;
			if (!line.empty() && line.back() == '\r')
				line.remove_suffix(1);
			auto first = line.find_first_not_of(" \t");
			if (first == std::string_view::npos || line[first] == '#')
				continue;
			line = line.substr(first);
			return true;
		}
		return false;
	}
};

std::vector<std::string_view> split_fields(std::string_view line)
{
	std::vector<std::string_view> fields;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
			++i;
		std::size_t j = i;
		while (j < line.size() && line[j] != ' ' && line[j] != '\t')
			++j;
		if (j > i)
			fields.push_back(line.substr(i, j - i));
		i = j;
	}
	return fields;
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no, const char *what)
{
	std::uint64_t value = 0;
	auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
	if (ec != std::errc{} || ptr != field.data() + field.size())
		throw ParseError(line_no, std::string("expected non-negative integer for ") + what + ", got '" +
		                              std::string(field) + "'");
	return value;
}

} // namespace

Graph parse_graph(std::string_view text)
{
	LineReader reader{text};
	std::string_view line;
	if (!reader.next(line))
		throw ParseError(0, "missing header line \"n m\"");
	auto header = split_fields(line);
	if (header.size() != 2)
		throw ParseError(reader.line_no, "header must be \"n m\"");
	const auto n = parse_count(header[0], reader.line_no, "n");
	const auto m = parse_count(header[1], reader.line_no, "m");
	if (n > std::uint64_t{1} << 31)
		throw ParseError(reader.line_no, "vertex count too large");

	std::vector<std::vector<Vertex>> adj(n);
	std::set<Edge> seen;
	std::uint64_t count = 0;
	while (reader.next(line)) {
		auto fields = split_fields(line);
		if (fields.size() != 2)
			throw ParseError(reader.line_no, "edge line must be \"u v\"");
		const auto u = parse_count(fields[0], reader.line_no, "u");
		const auto v = parse_count(fields[1], reader.line_no, "v");
		if (u >= n || v >= n)
			throw ParseError(reader.line_no, "vertex out of range (n=" + std::to_string(n) + ")");
		if (u == v)
			throw ParseError(reader.line_no, "self-loop at vertex " + std::to_string(u));
		Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
		if (!seen.insert(e).second)
			throw ParseError(reader.line_no, "duplicate edge " + std::to_string(e.first) + " " + std::to_string(e.second));
		++count;
		if (count > m)
			throw ParseError(reader.line_no, "more edges than the declared m=" + std::to_string(m));
		adj[u].push_back(static_cast<Vertex>(v));
		adj[v].push_back(static_cast<Vertex>(u));
	}
	if (count != m)
		throw ParseError(reader.line_no, "declared m=" + std::to_string(m) + " but found " + std::to_string(count) + " edges");
	return Graph::from_adjacency(std::move(adj));
}

std::string serialize_graph(const Graph &g)
{
	std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
	for (auto [u, v] : g.edges()) {
		out += std::to_string(u);
		out += ' ';
		out += std::to_string(v);
		out += '\n';
	}
	return out;
}

EditSet parse_edit_set(std::string_view text)
{
	LineReader reader{text};
	std::string_view line;
	EditSet f;
	while (reader.next(line)) {
		auto fields = split_fields(line);
		if (fields.size() != 3 || (fields[0] != "+" && fields[0] != "-"))
			throw ParseError(reader.line_no, "edit line must be \"+ u v\" or \"- u v\"");
		const auto u = parse_count(fields[1], reader.line_no, "u");
		const auto v = parse_count(fields[2], reader.line_no, "v");
		if (u == v)
			throw ParseError(reader.line_no, "edit of a self-pair");
		try {
			f.push_back(Edit(fields[0] == "+" ? EditSign::add : EditSign::remove, static_cast<Vertex>(u),
			                 static_cast<Vertex>(v)));
		} catch (const InvalidEdit &e) {
			throw ParseError(reader.line_no, e.what());
		}
	}
	return f;
}

std::string serialize_edit_set(const EditSet &f)
{
	std::string out;
	for (const auto &e : f) {
		out += static_cast<char>(e.sign);
		out += ' ' + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
	}
	return out;
}

} // namespace mced
