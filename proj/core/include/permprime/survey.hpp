// survey.hpp -- per-digit-count surveys of prime-producing digit sets
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <permprime/digits.hpp>
#include <permprime/errors.hpp>

namespace permprime {

/// One survey row: a digit set, its valid-permutation count p, how many of
/// those permutations are prime (c), and optionally the primes themselves.
struct DsRecord {
    DigitMultiset ds;
    std::uint64_t p = 0;
    std::uint64_t c = 0;
    std::optional<std::vector<std::uint64_t>> primes;  // ascending, length c when retained
};

/// Aggregate for one digit count: the "N - P - D" triple. big_d is empty
/// when only the prime count was computed (no per-set breakdown).
struct SurveySummary {
    int n = 0;
    std::uint64_t big_p = 0;
    std::optional<std::uint64_t> big_d;

    std::optional<double> ratio() const {
        if (!big_d || *big_d == 0)
            return std::nullopt;
        return static_cast<double>(big_p) / static_cast<double>(*big_d);
    }
};

/// P/D to four decimal places ("646.2609").
std::string format_ratio(double ratio);

struct SurveyOptions {
    LeadingZeroPolicy policy = LeadingZeroPolicy::exclude;
    int workers = 1;
    /// Primes are kept per record when n <= 5 or this is set.
    bool retain_primes = false;
    /// Lifts the digit-count caps below.
    bool allow_long_run = false;
    int cap_1379 = 12;
    int cap_all = 8;
};

struct SurveyResult {
    std::vector<DsRecord> records;  // sorted by canonical digit-set string
    SurveySummary summary;
};

/// Survey every size-n multiset over {1,3,7,9} by testing each distinct
/// permutation. Records with c = 0 are retained (they do not count toward
/// big_d). Throws CapacityError past the cap without allow_long_run.
SurveyResult survey_1379(int n, const SurveyOptions& options = {});

/// Survey all n-digit primes by sieving [10^(n-1), 10^n) and bucketing each
/// prime by its digit multiset; p per bucket comes from the closed-form
/// count under options.policy. Only digit sets with c >= 1 appear.
/// n in {9,10} requires allow_long_run; n > 10 exceeds the sieve.
SurveyResult survey_all(int n, const SurveyOptions& options = {});

/// Digit sets every full-length permutation of which is prime (c = p >= 1).
std::vector<DigitMultiset> find_full_permutation_sets(std::span<const DsRecord> records);

/// The k records with the largest c among those with c >= 1, ties broken by
/// ascending digit-set string; every record tied with the k-th value is
/// included, so the result may exceed k. Throws std::invalid_argument for
/// k < 1.
std::vector<DsRecord> find_maximal(std::span<const DsRecord> records, std::size_t k);

/// Total occurrences of each digit across all n-digit primes.
struct DigitFrequency {
    int n = 0;
    std::array<std::uint64_t, 10> counts{};
};

DigitFrequency digit_frequency(int n, const SurveyOptions& options = {});

/// One row of the P/D comparison table; a missing entry means that mode has
/// no ground truth at that n (rendered "?").
struct RatioTableRow {
    int n = 0;
    std::optional<double> mode_1379;
    std::optional<double> mode_all;
};

/// Join summaries from both modes on n, ascending.
std::vector<RatioTableRow> ratio_table(std::span<const SurveySummary> summaries_1379,
                                       std::span<const SurveySummary> summaries_all);

/// Prime count for n-digit integers by sieve alone (P without D); the cheap
/// path behind "N - P - ?" reporting.
std::uint64_t count_ndigit_primes(int n);

}  // namespace permprime
