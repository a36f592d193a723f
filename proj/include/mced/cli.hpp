#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mced {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
	exit_yes = 0,
	exit_no = 1,
	exit_usage = 2,
	exit_resource = 3,
};

/// Runs the command-line tool. `args` excludes the program name; an input
/// argument of "-" (the default) reads from `in`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace mced
