// sieve.hpp -- segmented sieve of Eratosthenes over [lo, hi)
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <permprime/errors.hpp>

namespace permprime {

struct SieveOptions {
    /// Hard ceiling on hi; a larger request raises CapacityError.
    std::uint64_t max_hi = 10'000'000'000ull;
    /// Odd residues per segment buffer (one byte each).
    std::size_t segment_odds = std::size_t{1} << 20;
};

namespace detail {

/// Odd primes <= limit, by a plain sieve (limit stays around sqrt(hi)).
std::vector<std::uint32_t> small_odd_primes(std::uint32_t limit);

/// Clear flags for composite odd values in [low, low + 2*flags.size()); low odd.
void mark_segment(std::uint64_t low, std::span<const std::uint32_t> base_primes, std::vector<std::uint8_t>& flags);

std::uint32_t isqrt_u64(std::uint64_t n);

}  // namespace detail

/// Calls fn(p) for every prime p in [lo, hi), ascending. Memory use is one
/// byte per odd residue of a segment plus the base primes.
template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn, const SieveOptions& opts = {}) {
    if (lo > hi)
        throw std::invalid_argument("sieve range must satisfy lo <= hi");
    if (hi > opts.max_hi)
        throw CapacityError("sieve range exceeds the configured ceiling of " + std::to_string(opts.max_hi));
    if (opts.segment_odds == 0)
        throw std::invalid_argument("segment size must be positive");
    if (lo >= hi)
        return;
    if (lo <= 2 && 2 < hi)
        fn(std::uint64_t{2});
    std::uint64_t start = std::max<std::uint64_t>(lo, 3) | 1;
    if (start >= hi)
        return;
    auto base = detail::small_odd_primes(detail::isqrt_u64(hi - 1));
    std::vector<std::uint8_t> flags;
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(opts.segment_odds);
    for (std::uint64_t low = start; low < hi; low += span) {
        std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(opts.segment_odds, (hi - low + 1) / 2));
        flags.assign(count, 1);
        detail::mark_segment(low, base, flags);
        for (std::size_t i = 0; i < count; ++i)
            if (flags[i])
                fn(low + 2 * i);
    }
}

/// The primes in [lo, hi) as a vector (intended for modest ranges).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts = {});

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts = {});

}  // namespace permprime
