#include "mced/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mced/errors.hpp"
#include "mced/gadgets.hpp"
#include "mced/graph_io.hpp"
#include "mced/kernelization.hpp"
#include "mced/modular_decomposition.hpp"
#include "mced/random.hpp"
#include "mced/recognition.hpp"
#include "mced/solver.hpp"

namespace mced {

namespace {

struct Config {
	int l = 2;
	int k = -1;
	int max_k = 32;
	std::string input = "-";
	bool stats = false;
	bool emit_dot = false;
	bool deterministic = true;
	bool parallel = false;
	bool no_kernel = false;
	std::uint64_t max_nodes = 0;
	std::optional<std::uint64_t> seed;

	// gen
	std::size_t n = 0;
	double p = 0.5;
	std::size_t clusters = 1;
	std::vector<std::size_t> sizes{4};
	std::size_t noise = 0;

	// bench
	std::vector<std::string> corpus;
	std::vector<std::size_t> planted_n;
	std::vector<std::size_t> size_cycle{11, 20};
	bool skip_solve = false;
};

std::string read_all(std::istream &in)
{
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

std::string read_input(const std::string &path, std::istream &in)
{
	if (path == "-")
		return read_all(in);
	std::ifstream file(path);
	if (!file)
		throw PreconditionError("cannot open " + path);
	return read_all(file);
}

std::uint64_t effective_seed(const Config &c)
{
	if (c.seed)
		return *c.seed;
	if (c.deterministic)
		return 1;
	return static_cast<std::uint64_t>(std::chrono::steady_clock::now().time_since_epoch().count());
}

void print_edits(std::ostream &out, bool yes, int k, const EditSet &f)
{
	out << "answer=" << (yes ? "yes" : "no") << '\n';
	out << "k=" << k << '\n';
	if (!yes)
		return;
	out << "edits=" << f.size() << '\n';
	out << serialize_edit_set(f);
}

int cmd_recognize(const Config &c, std::istream &in, std::ostream &out)
{
	const Graph g = parse_graph(read_input(c.input, in));
	if (c.emit_dot) {
		out << to_dot(decompose(g));
		out << to_dot(q_quotient(g));
	}
	if (c.stats) {
		std::size_t cliques = 0, l_cliques = 0, other = 0;
		for (const auto &comp : connected_components(g)) {
			switch (classify_component(g, comp, c.l).tag) {
			case ComponentClass::Tag::clique:
				++cliques;
				break;
			case ComponentClass::Tag::l_clique:
				++l_cliques;
				break;
			case ComponentClass::Tag::other:
				++other;
				break;
			}
		}
		out << "components_clique=" << cliques << "\ncomponents_l_clique=" << l_cliques
		    << "\ncomponents_other=" << other << '\n';
	}
	const auto w = find_forbidden(g, c.l);
	out << "l_cluster=" << (w ? "no" : "yes") << '\n';
	if (!w)
		return exit_yes;
	out << to_string(*w) << '\n';
	return exit_no;
}

int cmd_kernelize(const Config &c, std::istream &in, std::ostream &out)
{
	const Graph g = parse_graph(read_input(c.input, in));
	const auto r = kernelize(g, c.l, c.k);
	out << kernel_report(r, c.l, c.k);
	if (c.emit_dot && r.status == KernelStatus::kernel)
		out << to_dot(q_quotient(r.graph));
	return r.status == KernelStatus::no ? exit_no : exit_yes;
}

void print_solve_stats(std::ostream &out, const SolveResult &r)
{
	out << "nodes_explored=" << r.nodes_explored << '\n';
	out << "max_branching=" << r.max_branching << '\n';
	if (!r.kernelized)
		return;
	out << "kernel_status=" << to_string(r.kernel_status) << '\n';
	out << "components_removed=" << r.kernel_stats.components_removed << '\n';
	out << "quotient_size=" << r.kernel_stats.quotient_size << '\n';
	out << "vertices_truncated=" << r.kernel_stats.vertices_truncated << '\n';
	out << "lift_fallback=" << (r.lift_fallback ? 1 : 0) << '\n';
}

int cmd_solve(const Config &c, std::istream &in, std::ostream &out)
{
	const Graph g = parse_graph(read_input(c.input, in));
	SolveOptions options;
	options.kernelize = !c.no_kernel;
	options.parallel = c.parallel;
	options.max_nodes = c.max_nodes;
	if (c.k < 0) {
		const auto r = solve_optimal(g, c.l, c.max_k, options);
		print_edits(out, true, r.opt, r.edits);
		if (c.stats)
			out << "nodes_explored=" << r.nodes_explored << '\n';
		return exit_yes;
	}
	const auto r = solve_bounded(g, c.l, c.k, options);
	print_edits(out, r.yes, c.k, r.edits);
	if (c.stats)
		print_solve_stats(out, r);
	return r.yes ? exit_yes : exit_no;
}

int cmd_oracle(const Config &c, std::istream &in, std::ostream &out)
{
	const Graph g = parse_graph(read_input(c.input, in));
	const auto f = brute_force_oracle(g, c.l, c.k);
	print_edits(out, f.has_value(), c.k, f ? *f : EditSet{});
	return f ? exit_yes : exit_no;
}

template <typename T>
std::string join(const std::vector<T> &xs)
{
	std::ostringstream s;
	for (std::size_t i = 0; i < xs.size(); ++i)
		s << (i ? "," : "") << xs[i];
	return s.str();
}

int cmd_gen_random(const Config &c, std::ostream &out)
{
	const auto seed = effective_seed(c);
	out << "# gen random n=" << c.n << " p=" << c.p << " seed=" << seed << " rng=" << Rng::algorithm << '\n';
	out << serialize_graph(gen_random(c.n, c.p, seed));
	return exit_yes;
}

int cmd_gen_planted(const Config &c, std::ostream &out)
{
	const auto seed = effective_seed(c);
	const auto inst = gen_planted(c.clusters, c.sizes, c.l, c.noise, seed);
	out << "# gen planted clusters=" << c.clusters << " sizes=" << join(c.sizes) << " l=" << c.l
	    << " noise=" << c.noise << " seed=" << seed << " rng=" << Rng::algorithm << '\n';
	out << "# edit_bound=" << inst.edit_bound << '\n';
	out << serialize_graph(inst.graph);
	return exit_yes;
}

int cmd_gen_lpartite(const Config &c, std::ostream &out)
{
	const auto seed = effective_seed(c);
	out << "# gen l-partite n=" << c.n << " l=" << c.l << " p=" << c.p << " seed=" << seed
	    << " rng=" << Rng::algorithm << '\n';
	out << serialize_graph(gen_l_partite(c.n, c.l, c.p, seed));
	return exit_yes;
}

int cmd_gen_gadget(const Config &c, std::istream &in, std::ostream &out)
{
	const Graph g = parse_graph(read_input(c.input, in));
	const auto gadget = build_kl_gadget(g, c.l);
	out << "# gen gadget l=" << c.l << " source_vertices=" << g.num_vertices() << " vertex=i*l+(p-1)\n";
	out << serialize_graph(gadget.graph);
	return exit_yes;
}

double ms_since(std::chrono::steady_clock::time_point start)
{
	return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void bench_row(const Config &c, const std::string &name, const Graph &g, std::ostream &out)
{
	using clock = std::chrono::steady_clock;
	auto t0 = clock::now();
	const auto tree = decompose(g);
	const double decompose_ms = ms_since(t0);
	t0 = clock::now();
	const auto kernel = kernelize(g, c.l, c.k);
	const double kernelize_ms = ms_since(t0);

	std::string solve_ms = "", answer = "skipped";
	if (!c.skip_solve) {
		SolveOptions options;
		options.max_nodes = c.max_nodes;
		options.parallel = c.parallel;
		t0 = clock::now();
		try {
			answer = solve_bounded(g, c.l, c.k, options).yes ? "yes" : "no";
		} catch (const ResourceLimit &) {
			answer = "limit";
		}
		std::ostringstream s;
		s << std::fixed << std::setprecision(3) << ms_since(t0);
		solve_ms = s.str();
	}
	out << std::fixed << std::setprecision(3);
	out << name << ',' << g.num_vertices() << ',' << g.num_edges() << ',' << tree.num_nodes() << ',' << decompose_ms
	    << ',' << kernelize_ms << ',' << to_string(kernel.status) << ',' << kernel.graph.num_vertices() << ','
	    << solve_ms << ',' << answer << '\n';
}

int cmd_bench(const Config &c, std::ostream &out)
{
	if (c.k < 0)
		throw PreconditionError("bench needs --k");
	out << "instance,n,m,md_nodes,decompose_ms,kernelize_ms,kernel_status,kernel_vertices,solve_ms,answer\n";
	for (const auto &path : c.corpus) {
		std::ifstream file(path);
		if (!file)
			throw PreconditionError("cannot open " + path);
		bench_row(c, path, parse_graph(read_all(file)), out);
	}
	const auto seed = effective_seed(c);
	for (auto n : c.planted_n) {
		const auto inst = gen_planted_order(n, c.size_cycle, c.l, static_cast<std::size_t>(c.k), seed);
		bench_row(c, "planted-" + std::to_string(n) + "-seed" + std::to_string(seed), inst.graph, out);
	}
	return exit_yes;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
	Config c;
	CLI::App app{"Edit graphs into disjoint unions of cliques and complete l-partite graphs", "mced"};
	app.require_subcommand(1);

	auto add_l = [&](CLI::App *cmd) {
		cmd->add_option("--l", c.l, "l: largest number of colour classes of an l-clique")->check(CLI::Range(2, 1 << 20));
	};
	auto add_k = [&](CLI::App *cmd, bool required) {
		auto *opt = cmd->add_option("--k", c.k, "edit budget")->check(CLI::NonNegativeNumber);
		if (required)
			opt->required();
	};
	auto add_input = [&](CLI::App *cmd) { cmd->add_option("input", c.input, "edge-list file, '-' for stdin"); };
	auto add_common = [&](CLI::App *cmd) {
		cmd->add_flag("--stats", c.stats, "print statistics");
		cmd->add_flag("--emit-dot", c.emit_dot, "print DOT renderings");
		cmd->add_flag("--deterministic,!--no-deterministic", c.deterministic, "fixed default seed (default on)");
		cmd->add_flag("--parallel", c.parallel, "explore root branches on threads");
		cmd->add_option("--seed", c.seed, "random seed");
	};

	auto *recognize = app.add_subcommand("recognize", "test for an L-cluster graph, print a witness if not");
	add_l(recognize);
	add_input(recognize);
	add_common(recognize);

	auto *kernel = app.add_subcommand("kernelize", "build the problem kernel");
	add_l(kernel);
	add_k(kernel, true);
	add_input(kernel);
	add_common(kernel);

	auto *solve = app.add_subcommand("solve", "bounded search tree; without --k, find the optimum");
	add_l(solve);
	add_k(solve, false);
	add_input(solve);
	add_common(solve);
	solve->add_option("--max-k", c.max_k, "optimum search ceiling")->check(CLI::NonNegativeNumber);
	solve->add_option("--max-nodes", c.max_nodes, "search node limit, 0 = none");
	solve->add_flag("--no-kernel", c.no_kernel, "search the input directly");

	auto *oracle = app.add_subcommand("oracle", "exhaustive search over edit sets");
	add_l(oracle);
	add_k(oracle, true);
	add_input(oracle);
	add_common(oracle);

	auto *gen = app.add_subcommand("gen", "instance generators");
	gen->require_subcommand(1);
	auto *gen_random_cmd = gen->add_subcommand("random", "G(n,p)");
	gen_random_cmd->add_option("--n", c.n, "vertices")->required();
	gen_random_cmd->add_option("--p", c.p, "edge probability")->check(CLI::Range(0.0, 1.0));
	add_common(gen_random_cmd);
	auto *gen_planted_cmd = gen->add_subcommand("planted", "L-cluster graph plus random toggles");
	gen_planted_cmd->add_option("--clusters", c.clusters, "number of components");
	gen_planted_cmd->add_option("--sizes", c.sizes, "component sizes, one per component or one for all")->delimiter(',');
	gen_planted_cmd->add_option("--noise", c.noise, "number of random pair toggles");
	add_l(gen_planted_cmd);
	add_common(gen_planted_cmd);
	auto *gen_lpartite_cmd = gen->add_subcommand("l-partite", "random l-partite graph");
	gen_lpartite_cmd->add_option("--n", c.n, "vertices")->required();
	gen_lpartite_cmd->add_option("--p", c.p, "edge probability across classes")->check(CLI::Range(0.0, 1.0));
	add_l(gen_lpartite_cmd);
	add_common(gen_lpartite_cmd);
	auto *gen_gadget_cmd = gen->add_subcommand("gadget", "blow every vertex up into an l-clique");
	add_l(gen_gadget_cmd);
	add_input(gen_gadget_cmd);
	add_common(gen_gadget_cmd);

	auto *bench = app.add_subcommand("bench", "time decomposition, kernelization and search; CSV");
	add_l(bench);
	add_k(bench, true);
	add_common(bench);
	bench->add_option("corpus", c.corpus, "edge-list files");
	bench->add_option("--planted-n", c.planted_n, "planted instance sizes")->delimiter(',');
	bench->add_option("--cluster-sizes", c.size_cycle, "cluster sizes used in turn")->delimiter(',');
	bench->add_option("--max-nodes", c.max_nodes, "search node limit, 0 = none");
	bench->add_flag("--skip-solve", c.skip_solve, "time decomposition and kernelization only");

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp &e) {
		app.exit(e, out, err);
		return exit_yes;
	} catch (const CLI::CallForAllHelp &e) {
		app.exit(e, out, err);
		return exit_yes;
	} catch (const CLI::ParseError &e) {
		app.exit(e, out, err);
		return exit_usage;
	}

	try {
		if (recognize->parsed())
			return cmd_recognize(c, in, out);
		if (kernel->parsed())
			return cmd_kernelize(c, in, out);
		if (solve->parsed())
			return cmd_solve(c, in, out);
		if (oracle->parsed())
			return cmd_oracle(c, in, out);
		if (gen_random_cmd->parsed())
			return cmd_gen_random(c, out);
		if (gen_planted_cmd->parsed())
			return cmd_gen_planted(c, out);
		if (gen_lpartite_cmd->parsed())
			return cmd_gen_lpartite(c, out);
		if (gen_gadget_cmd->parsed())
			return cmd_gen_gadget(c, in, out);
		if (bench->parsed())
			return cmd_bench(c, out);
	} catch (const ResourceLimit &e) {
		err << "mced: " << e.what() << '\n';
		return exit_resource;
	} catch (const ParseError &e) {
		err << "mced: parse error: " << e.what() << '\n';
		return exit_usage;
	} catch (const std::invalid_argument &e) {
		err << "mced: " << e.what() << '\n';
		return exit_usage;
	}
	err << "mced: no command\n";
	return exit_usage;
}

} // namespace mced
