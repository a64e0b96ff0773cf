#include <permprime/repunit.hpp>

#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace permprime {

WideNat repunit(int n) {
    if (n < 1)
        throw std::invalid_argument("repunit exponent must be >= 1");
    return WideNat::from_decimal(std::string(static_cast<std::size_t>(n), '1'));
}

std::vector<RepunitResult> scan_repunit_primes(int max_n, const RepunitScanOptions& options) {
    std::vector<int> candidates;
    for (int e = 2; e <= max_n; ++e)
        if (is_prime_small(static_cast<std::uint64_t>(e)))
            candidates.push_back(e);

    std::vector<RepunitResult> slots(candidates.size());
    detail::parallel_for_index(candidates.size(), options.workers, [&](std::size_t i) {
        int e = candidates[i];
        PrimalityVerdict v = is_probable_prime(repunit(e), 0);
        if (!v.is_composite() && v.kind == Verdict::probable_prime)
            v = is_probable_prime(repunit(e), options.confirm_rounds);
        slots[i] = RepunitResult{e, v};
    });

    std::vector<RepunitResult> hits;
    for (const RepunitResult& r : slots)
        if (!r.verdict.is_composite())
            hits.push_back(r);
    return hits;  // candidates ascending, so hits are too
}

}  // namespace permprime
