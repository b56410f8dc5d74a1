#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sombor {

// Thrown when an input graph exceeds one of the documented size caps
// (canonical labeling, exhaustive enumeration, matching search, graph6).
class unsupported_size_error : public std::invalid_argument {
public:
    explicit unsupported_size_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// Malformed textual input. `offset` is a byte offset for graph6 input and a
// 1-based line number for edge-list input; the message says which.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace sombor
