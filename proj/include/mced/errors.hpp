#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mced {

/// Malformed graph or edit-set document. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, const std::string &what)
	    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

/// An edit whose sign contradicts the graph it is applied to, or a repeated pair.
class InvalidEdit : public std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/// Caller broke a documented precondition (e.g. a vertex set that is not a component).
class PreconditionError : public std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/// Internal structural invariant does not hold for the supplied data.
class InvariantViolation : public std::logic_error {
	using std::logic_error::logic_error;
};

/// A configured size or budget ceiling was exceeded.
class ResourceLimit : public std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace mced
