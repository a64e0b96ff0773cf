// permute.hpp -- distinct permutations of a digit multiset, ascending
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <permprime/digits.hpp>

namespace permprime {

/// The lexicographically first arrangement (the canonical rendering).
std::string first_permutation(const DigitMultiset& ms);

/// Replace `digits` with the least permutation of its multiset strictly
/// greater than it. Returns false (leaving `digits` rearranged to the
/// first permutation) when `digits` was already the nonincreasing, i.e.
/// last, arrangement.
bool advance_permutation(std::string& digits);

/// Streams the distinct permutations of a multiset in increasing order.
/// Under the exclude policy arrangements with a leading zero are skipped,
/// so every yielded value has exactly ms.size() digits.
///
/// A cursor is single-owner; run independent cursors for parallel work.
class PermutationCursor {
public:
    explicit PermutationCursor(const DigitMultiset& ms, LeadingZeroPolicy policy = LeadingZeroPolicy::exclude);

    /// Next permutation as an integer. Requires ms.size() <= 19 (the widest
    /// digit count a 64-bit value can hold); throws std::logic_error beyond.
    std::optional<std::uint64_t> next();

    /// Next permutation as a digit string (any size).
    std::optional<std::string> next_string();

private:
    bool advance();

    std::string cur_;
    LeadingZeroPolicy policy_;
    bool fresh_ = true;
    bool exhausted_ = false;
};

}  // namespace permprime
