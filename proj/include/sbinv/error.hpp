#pragma once

#include <stdexcept>
#include <string>

namespace sbinv {

/// Raised for domain violations: out-of-range parameters, inconsistent
/// cover data, malformed input files.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sbinv
