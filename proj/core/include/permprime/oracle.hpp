// oracle.hpp -- slow, independent reference answers for cross-checking
//
// Everything here is deliberately naive and shares no code path with the
// fast implementations it checks: arrangements come from its own recursive
// generator, primality from plain trial division. Used by the --self-check
// CLI mode and the test suites.
#pragma once

#include <cstdint>
#include <vector>

#include <permprime/digits.hpp>

namespace permprime::oracle {

bool trial_division_prime(std::uint64_t n);

/// Every distinct arrangement of the multiset as an integer, ascending.
/// Intended for small multisets (the caller keeps sizes sane); requires
/// ms.size() <= 19.
std::vector<std::uint64_t> all_arrangements(const DigitMultiset& ms, LeadingZeroPolicy policy);

/// How many distinct arrangements are prime.
std::uint64_t prime_arrangements(const DigitMultiset& ms, LeadingZeroPolicy policy);

}  // namespace permprime::oracle
