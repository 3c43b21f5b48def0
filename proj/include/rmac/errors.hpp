#ifndef RMAC_ERRORS_HPP
#define RMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rmac {

/// Raised when an exponential computation would exceed its size guard.
/// Callers may retry with the guard override set.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. two independent routes disagree).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rmac

#endif
