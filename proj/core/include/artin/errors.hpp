#pragma once

#include <stdexcept>
#include <string>

namespace artin {

struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

// Thrown when an operation would exceed a configured bound; the message
// names the bound.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace artin
