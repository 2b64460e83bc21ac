#pragma once

#include <stdexcept>
#include <string>

namespace seqop {

// Error taxonomy mirrored by the CLI exit codes.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_shape(bool cond, const std::string& what) {
    if (!cond) throw ShapeError(what);
}

inline void require_invariant(bool cond, const std::string& what) {
    if (!cond) throw InvariantError(what);
}

} // namespace seqop
