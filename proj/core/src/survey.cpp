#include <permprime/survey.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <permprime/permute.hpp>
#include <permprime/primality.hpp>
#include <permprime/sieve.hpp>

#include "parallel.hpp"

namespace permprime {

std::string format_ratio(double ratio) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4f", ratio);
    return buf;
}

namespace {

std::uint64_t pow10_u64(int e) {
    std::uint64_t v = 1;
    while (e-- > 0)
        v *= 10;
    return v;
}

SurveySummary summarize(int n, std::span<const DsRecord> records) {
    SurveySummary s;
    s.n = n;
    std::uint64_t d = 0;
    for (const DsRecord& r : records) {
        s.big_p += r.c;
        if (r.c >= 1)
            ++d;
    }
    s.big_d = d;
    return s;
}

}  // namespace

SurveyResult survey_1379(int n, const SurveyOptions& options) {
    if (n < 1)
        throw std::invalid_argument("digit count must be >= 1");
    if (n > options.cap_1379 && !options.allow_long_run)
        throw CapacityError("n=" + std::to_string(n) + " exceeds the 1379-mode cap (" +
                            std::to_string(options.cap_1379) + "); pass allow_long_run to override");
    if (n > 19)
        throw CapacityError("1379-mode surveys are limited to 19 digits (64-bit permutation values)");

    const bool retain = options.retain_primes || n <= 5;
    auto multisets = enumerate_multisets(n, Alphabet::d1379());
    std::vector<DsRecord> records;
    records.reserve(multisets.size());
    for (const DigitMultiset& ms : multisets)
        records.push_back(DsRecord{ms, valid_permutations(ms, options.policy), 0, std::nullopt});

    detail::parallel_for_index(records.size(), options.workers, [&](std::size_t i) {
        DsRecord& rec = records[i];
        if (retain)
            rec.primes.emplace();
        PermutationCursor cursor(rec.ds, options.policy);
        while (auto v = cursor.next()) {
            if (is_prime_small(*v)) {
                ++rec.c;
                if (retain)
                    rec.primes->push_back(*v);
            }
        }
    });

    SurveyResult out;
    out.summary = summarize(n, records);
    out.records = std::move(records);  // enumeration order == canonical order
    return out;
}

SurveyResult survey_all(int n, const SurveyOptions& options) {
    if (n < 1)
        throw std::invalid_argument("digit count must be >= 1");
    if (n > options.cap_all && !options.allow_long_run)
        throw CapacityError("n=" + std::to_string(n) + " exceeds the all-digits cap (" +
                            std::to_string(options.cap_all) + "); pass allow_long_run to override");
    if (n > 10)
        throw CapacityError("all-digits surveys are limited to 10 digits (sieve ceiling 10^10)");

    const bool retain = options.retain_primes || n <= 5;
    const std::uint64_t lo = (n == 1) ? 2 : pow10_u64(n - 1);
    const std::uint64_t hi = pow10_u64(n);

    // Bucket primes by digit multiset. Counts never exceed n <= 10, so four
    // bits per digit pack the whole count vector into one key.
    struct Bucket {
        std::uint64_t c = 0;
        std::vector<std::uint64_t> primes;
    };
    std::unordered_map<std::uint64_t, Bucket> buckets;
    for_each_prime(lo, hi, [&](std::uint64_t prime) {
        std::uint64_t key = 0;
        for (std::uint64_t v = prime; v != 0; v /= 10)
            key += std::uint64_t{1} << (4 * (v % 10));
        Bucket& b = buckets[key];
        ++b.c;
        if (retain)
            b.primes.push_back(prime);  // sieve order is ascending already
    });

    std::vector<DsRecord> records;
    records.reserve(buckets.size());
    for (auto& [key, bucket] : buckets) {
        DigitMultiset::Counts counts{};
        for (int d = 0; d <= 9; ++d)
            counts[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>((key >> (4 * d)) & 0xf);
        DigitMultiset ds = DigitMultiset::from_counts(counts);
        DsRecord rec{ds, valid_permutations(ds, options.policy), bucket.c, std::nullopt};
        if (retain)
            rec.primes = std::move(bucket.primes);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const DsRecord& a, const DsRecord& b) { return a.ds < b.ds; });

    SurveyResult out;
    out.summary = summarize(n, records);
    out.records = std::move(records);
    return out;
}

std::vector<DigitMultiset> find_full_permutation_sets(std::span<const DsRecord> records) {
    std::vector<DigitMultiset> out;
    for (const DsRecord& r : records)
        if (r.p >= 1 && r.c == r.p)
            out.push_back(r.ds);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DsRecord> find_maximal(std::span<const DsRecord> records, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("top-tier size must be >= 1");
    std::vector<DsRecord> pool;
    for (const DsRecord& r : records)
        if (r.c >= 1)
            pool.push_back(r);
    std::sort(pool.begin(), pool.end(), [](const DsRecord& a, const DsRecord& b) {
        if (a.c != b.c)
            return a.c > b.c;
        return a.ds < b.ds;
    });
    if (pool.size() > k) {
        std::uint64_t threshold = pool[k - 1].c;
        std::size_t end = k;
        while (end < pool.size() && pool[end].c == threshold)
            ++end;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(end), pool.end());
    }
    return pool;
}

DigitFrequency digit_frequency(int n, const SurveyOptions& options) {
    if (n < 1)
        throw std::invalid_argument("digit count must be >= 1");
    if (n > options.cap_all && !options.allow_long_run)
        throw CapacityError("n=" + std::to_string(n) + " exceeds the all-digits cap (" +
                            std::to_string(options.cap_all) + "); pass allow_long_run to override");
    if (n > 10)
        throw CapacityError("digit frequency is limited to 10 digits (sieve ceiling 10^10)");
    DigitFrequency freq;
    freq.n = n;
    const std::uint64_t lo = (n == 1) ? 2 : pow10_u64(n - 1);
    for_each_prime(lo, pow10_u64(n), [&](std::uint64_t prime) {
        for (std::uint64_t v = prime; v != 0; v /= 10)
            ++freq.counts[static_cast<std::size_t>(v % 10)];
    });
    return freq;
}

std::vector<RatioTableRow> ratio_table(std::span<const SurveySummary> summaries_1379,
                                       std::span<const SurveySummary> summaries_all) {
    std::map<int, RatioTableRow> rows;
    for (const SurveySummary& s : summaries_1379) {
        rows[s.n].n = s.n;
        rows[s.n].mode_1379 = s.ratio();
    }
    for (const SurveySummary& s : summaries_all) {
        rows[s.n].n = s.n;
        rows[s.n].mode_all = s.ratio();
    }
    std::vector<RatioTableRow> out;
    out.reserve(rows.size());
    for (auto& [n, row] : rows)
        out.push_back(row);
    return out;
}

std::uint64_t count_ndigit_primes(int n) {
    if (n < 1)
        throw std::invalid_argument("digit count must be >= 1");
    if (n > 10)
        throw CapacityError("prime counting is limited to 10 digits (sieve ceiling 10^10)");
    const std::uint64_t lo = (n == 1) ? 2 : pow10_u64(n - 1);
    return count_primes(lo, pow10_u64(n));
}

}  // namespace permprime
