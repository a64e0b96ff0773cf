// digits.hpp -- canonical digit multisets, multiset enumeration, permutation counting
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permprime {

/// How permutations that start with the digit 0 are counted.
/// Under `exclude` a leading-zero arrangement is not an n-digit integer
/// and does not count; `count_all` keeps every distinct arrangement.
enum class LeadingZeroPolicy { exclude, count_all };

/// A nonempty subset of the decimal digits 0..9.
class Alphabet {
public:
    /// The digits {1,3,7,9} -- the only digits a full-permutation set of
    /// length >= 2 may contain (anything ending in 0,2,4,5,6,8 is divisible
    /// by 2 or 5).
    static constexpr Alphabet d1379() { return Alphabet((1u << 1) | (1u << 3) | (1u << 7) | (1u << 9)); }

    /// All ten digits.
    static constexpr Alphabet all_digits() { return Alphabet(0x3ffu); }

    /// Build from an explicit digit list. Throws std::invalid_argument on an
    /// empty list or a digit outside 0..9.
    static Alphabet from_digits(std::span<const int> digits);

    bool contains(int digit) const { return digit >= 0 && digit <= 9 && (mask_ >> digit) & 1u; }
    int size() const;

    /// Member digits in ascending order.
    std::vector<int> digits() const;

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    constexpr explicit Alphabet(unsigned mask) : mask_(static_cast<std::uint16_t>(mask)) {}
    std::uint16_t mask_;
};

inline constexpr int kMaxMultisetDigits = 64;

/// A multiset of decimal digits -- the survey's "basic digit set".
/// Canonical rendering is the nondecreasing digit string ("119" for the
/// digits of 911). Always nonempty; at most kMaxMultisetDigits digits.
class DigitMultiset {
public:
    using Counts = std::array<std::uint8_t, 10>;

    /// Throws std::invalid_argument if the counts sum to 0 or exceed
    /// kMaxMultisetDigits.
    static DigitMultiset from_counts(const Counts& counts);

    /// Multiset of the decimal digits of `value` (0 yields {0}).
    static DigitMultiset of_value(std::uint64_t value);

    /// Total number of digits (>= 1).
    int size() const { return n_; }

    /// Occurrences of `digit` (0 for digits outside 0..9).
    int count(int digit) const { return (digit >= 0 && digit <= 9) ? counts_[static_cast<std::size_t>(digit)] : 0; }

    const Counts& counts() const { return counts_; }

    /// Canonical nondecreasing digit string.
    std::string to_string() const;

    friend bool operator==(const DigitMultiset&, const DigitMultiset&) = default;

    /// Canonical-string order (lexicographic on the rendering).
    friend std::strong_ordering operator<=>(const DigitMultiset& a, const DigitMultiset& b);

private:
    DigitMultiset(const Counts& counts, int n) : counts_(counts), n_(n) {}
    Counts counts_{};
    int n_ = 0;
};

/// Multiset of a digit sequence. Throws std::invalid_argument on an empty
/// sequence or an element outside 0..9.
DigitMultiset canonicalize(std::span<const int> digits);

/// Multiset of a digit-character string ("911" -> multiset rendering "119").
DigitMultiset canonicalize(std::string_view digit_chars);

/// Number of distinct arrangements, n! / prod(counts[d]!), computed by
/// interleaved exact division so every intermediate stays integral.
/// Throws std::overflow_error if the count does not fit 64 bits (cannot
/// happen for n <= 20; use wide_multinomial from widenat.hpp beyond that).
std::uint64_t multinomial_permutations(const DigitMultiset& ms);

/// Distinct arrangements that are genuine n-digit integers under `policy`.
/// Under exclude this is (n - count(0)) / n of the multinomial, exactly;
/// the all-zero multiset yields 0.
std::uint64_t valid_permutations(const DigitMultiset& ms, LeadingZeroPolicy policy);

/// C(n + |alphabet| - 1, |alphabet| - 1): how many size-n multisets exist.
std::uint64_t multiset_count(int n, Alphabet alphabet);

/// Streams every size-n multiset over the alphabet exactly once, in
/// ascending canonical-string order.
class MultisetEnumerator {
public:
    /// Throws std::invalid_argument for n < 1 or n > kMaxMultisetDigits.
    MultisetEnumerator(int n, Alphabet alphabet);

    std::optional<DigitMultiset> next();

private:
    std::vector<int> alphabet_;  // allowed digits, ascending
    std::vector<int> idx_;       // nondecreasing indices into alphabet_
    bool done_ = false;
    bool first_ = true;
};

/// Convenience: the full enumeration as a vector.
std::vector<DigitMultiset> enumerate_multisets(int n, Alphabet alphabet);

}  // namespace permprime
