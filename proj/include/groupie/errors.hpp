#pragma once
#include <stdexcept>
#include <string>

namespace groupie {

// Malformed input document (edge lists etc.); message names the offending line.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds a hard resource cap (enumeration size,
// convolution support blowup).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groupie
