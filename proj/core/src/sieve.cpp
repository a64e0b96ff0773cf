#include <permprime/sieve.hpp>

#include <algorithm>
#include <cmath>

namespace permprime {

namespace detail {

std::uint32_t isqrt_u64(std::uint64_t n) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> small_odd_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 3)
        return primes;
    std::vector<std::uint8_t> is_prime(limit + 1, 1);
    for (std::uint32_t i = 3; static_cast<std::uint64_t>(i) * i <= limit; i += 2)
        if (is_prime[i])
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += 2 * i)
                is_prime[static_cast<std::size_t>(j)] = 0;
    for (std::uint32_t i = 3; i <= limit; i += 2)
        if (is_prime[i])
            primes.push_back(i);
    return primes;
}

void mark_segment(std::uint64_t low, std::span<const std::uint32_t> base_primes, std::vector<std::uint8_t>& flags) {
    const std::uint64_t high = low + 2 * static_cast<std::uint64_t>(flags.size());  // exclusive
    for (std::uint32_t p : base_primes) {
        std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
        if (p2 >= high)
            break;
        std::uint64_t q = std::max(p2, (low + p - 1) / p * p);
        if (q % 2 == 0)
            q += p;
        for (; q < high; q += 2 * p)
            flags[static_cast<std::size_t>((q - low) / 2)] = 0;
    }
}

}  // namespace detail

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); }, opts);
    return out;
}

std::uint64_t count_primes(std::uint64_t lo, std::uint64_t hi, const SieveOptions& opts) {
    std::uint64_t n = 0;
    for_each_prime(lo, hi, [&](std::uint64_t) { ++n; }, opts);
    return n;
}

}  // namespace permprime
