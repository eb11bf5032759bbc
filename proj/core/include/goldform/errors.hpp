#pragma once

#include <stdexcept>
#include <string>

namespace gf {

// Singular input for a structural formula (zero shear, degenerate boundary eigenvalues).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed graph, move or coordinate request.
struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace gf
