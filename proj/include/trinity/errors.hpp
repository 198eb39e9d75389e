#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trinity {

/// A mathematically required invariant failed to hold at runtime.  Carries
/// the name of the violated check so callers and certificate reports can
/// point at the exact link of the chain that broke.
class verification_error : public std::runtime_error {
public:
    verification_error(std::string check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}

    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

/// Invalid argument or malformed input file.
class input_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested computation would exceed a configured enumeration budget.
class resource_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace trinity
