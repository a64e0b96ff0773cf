#pragma once

#include <stdexcept>
#include <string>

namespace permprime {

/// A request exceeds a configured resource cap (digit-count ceiling, sieve
/// range, ...). Carries a message naming the cap that was hit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permprime
