#pragma once

#include <stdexcept>
#include <string>

namespace cubemap {

// Two finite prefixes coincide up to their full tabulated depth, so the
// sequence metric cannot decide whether they name the same point.
class UndecidedAtDepth : public std::runtime_error {
public:
    explicit UndecidedAtDepth(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cubemap
