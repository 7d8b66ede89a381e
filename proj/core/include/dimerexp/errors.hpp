#pragma once

#include <stdexcept>
#include <string>

namespace dimerexp {

/// Thrown when an enumeration or table exceeds a configured size ceiling.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dimerexp
