#include <permprime/oracle.hpp>

#include <stdexcept>

namespace permprime::oracle {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

void generate(DigitMultiset::Counts& remaining, int depth, int total, std::uint64_t acc, LeadingZeroPolicy policy,
              std::vector<std::uint64_t>& out) {
    if (depth == total) {
        out.push_back(acc);
        return;
    }
    for (int d = 0; d <= 9; ++d) {
        if (remaining[static_cast<std::size_t>(d)] == 0)
            continue;
        if (depth == 0 && d == 0 && policy == LeadingZeroPolicy::exclude)
            continue;
        --remaining[static_cast<std::size_t>(d)];
        generate(remaining, depth + 1, total, acc * 10 + static_cast<std::uint64_t>(d), policy, out);
        ++remaining[static_cast<std::size_t>(d)];
    }
}

}  // namespace

std::vector<std::uint64_t> all_arrangements(const DigitMultiset& ms, LeadingZeroPolicy policy) {
    if (ms.size() > 19)
        throw std::invalid_argument("oracle arrangements limited to 19 digits");
    std::vector<std::uint64_t> out;
    DigitMultiset::Counts counts = ms.counts();
    generate(counts, 0, ms.size(), 0, policy, out);
    return out;  // ascending by construction: digits tried low to high
}

std::uint64_t prime_arrangements(const DigitMultiset& ms, LeadingZeroPolicy policy) {
    std::uint64_t c = 0;
    for (std::uint64_t v : all_arrangements(ms, policy))
        if (trial_division_prime(v))
            ++c;
    return c;
}

}  // namespace permprime::oracle
