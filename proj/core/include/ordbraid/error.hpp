#pragma once

#include <stdexcept>
#include <string>

namespace ordbraid {

// Malformed user input: bad tokens, out-of-range letters, unknown names.
class InputError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Operands that cannot be combined (strand counts, variable sets, ranks).
class MismatchError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// A computation ran past a configured size or step cap.
class CapExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// Laurent division with no Laurent-polynomial quotient.
class InexactDivision : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace ordbraid
