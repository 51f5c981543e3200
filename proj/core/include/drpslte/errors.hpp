#pragma once

#include <stdexcept>
#include <string>

namespace drpslte {

// Rejected input values (out of range, non-finite, malformed keys or units).
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Lookup miss in the spectrum registry. Exit code 1.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem trouble: unreadable scenario file, unwritable output. Exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drpslte
