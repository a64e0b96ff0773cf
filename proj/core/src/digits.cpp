#include <permprime/digits.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace permprime {

Alphabet Alphabet::from_digits(std::span<const int> digits) {
    if (digits.empty())
        throw std::invalid_argument("alphabet must be nonempty");
    unsigned mask = 0;
    for (int d : digits) {
        if (d < 0 || d > 9)
            throw std::invalid_argument("alphabet digit out of range 0..9");
        mask |= 1u << d;
    }
    return Alphabet(mask);
}

int Alphabet::size() const {
    return std::popcount(static_cast<unsigned>(mask_));
}

std::vector<int> Alphabet::digits() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int d = 0; d <= 9; ++d)
        if ((mask_ >> d) & 1u)
            out.push_back(d);
    return out;
}

DigitMultiset DigitMultiset::from_counts(const Counts& counts) {
    int n = 0;
    for (std::uint8_t c : counts)
        n += c;
    if (n < 1)
        throw std::invalid_argument("digit multiset must be nonempty");
    if (n > kMaxMultisetDigits)
        throw std::invalid_argument("digit multiset exceeds 64 digits");
    return DigitMultiset(counts, n);
}

DigitMultiset DigitMultiset::of_value(std::uint64_t value) {
    Counts counts{};
    if (value == 0) {
        counts[0] = 1;
    } else {
        while (value != 0) {
            ++counts[value % 10];
            value /= 10;
        }
    }
    return from_counts(counts);
}

std::string DigitMultiset::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_));
    for (int d = 0; d <= 9; ++d)
        s.append(static_cast<std::size_t>(counts_[static_cast<std::size_t>(d)]), static_cast<char>('0' + d));
    return s;
}

std::strong_ordering operator<=>(const DigitMultiset& a, const DigitMultiset& b) {
    // Lexicographic order of the canonical renderings, without materializing
    // them: walk the digit runs of both multisets in parallel.
    int da = 0, db = 0;
    int ra = a.counts_[0], rb = b.counts_[0];
    while (true) {
        while (da <= 9 && ra == 0)
            ra = (++da <= 9) ? a.counts_[static_cast<std::size_t>(da)] : 0;
        while (db <= 9 && rb == 0)
            rb = (++db <= 9) ? b.counts_[static_cast<std::size_t>(db)] : 0;
        if (da > 9 && db > 9)
            return std::strong_ordering::equal;
        if (da > 9)
            return std::strong_ordering::less;  // a is a proper prefix
        if (db > 9)
            return std::strong_ordering::greater;
        if (da != db)
            return da <=> db;
        int run = std::min(ra, rb);
        ra -= run;
        rb -= run;
    }
}

DigitMultiset canonicalize(std::span<const int> digits) {
    if (digits.empty())
        throw std::invalid_argument("digit sequence must be nonempty");
    DigitMultiset::Counts counts{};
    for (int d : digits) {
        if (d < 0 || d > 9)
            throw std::invalid_argument("digit out of range 0..9");
        ++counts[static_cast<std::size_t>(d)];
    }
    return DigitMultiset::from_counts(counts);
}

DigitMultiset canonicalize(std::string_view digit_chars) {
    if (digit_chars.empty())
        throw std::invalid_argument("digit string must be nonempty");
    DigitMultiset::Counts counts{};
    for (char ch : digit_chars) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("digit string may contain only 0..9");
        ++counts[static_cast<std::size_t>(ch - '0')];
    }
    return DigitMultiset::from_counts(counts);
}

std::uint64_t multinomial_permutations(const DigitMultiset& ms) {
    // result * placed / i is exact at every step: after placing i copies of
    // the current digit among `placed` slots the running value is a product
    // of binomial coefficients.
    unsigned __int128 result = 1;
    std::uint64_t placed = 0;
    for (int d = 0; d <= 9; ++d) {
        for (int i = 1; i <= ms.count(d); ++i) {
            result = result * (++placed) / static_cast<unsigned>(i);
            if (result > std::numeric_limits<std::uint64_t>::max())
                throw std::overflow_error("multinomial exceeds 64 bits; use wide_multinomial");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t valid_permutations(const DigitMultiset& ms, LeadingZeroPolicy policy) {
    std::uint64_t m = multinomial_permutations(ms);
    if (policy == LeadingZeroPolicy::count_all)
        return m;
    int zeros = ms.count(0);
    int n = ms.size();
    if (zeros == n)
        return 0;
    // Arrangements with a nonzero lead: (n - zeros)/n of the total, exactly.
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(m) * static_cast<unsigned>(n - zeros) /
                                      static_cast<unsigned>(n));
}

std::uint64_t multiset_count(int n, Alphabet alphabet) {
    if (n < 1)
        throw std::invalid_argument("multiset size must be >= 1");
    int k = alphabet.size() - 1;
    // C(n + k, k) with interleaved division.
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned>(n + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("multiset count exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

MultisetEnumerator::MultisetEnumerator(int n, Alphabet alphabet) : alphabet_(alphabet.digits()) {
    if (n < 1 || n > kMaxMultisetDigits)
        throw std::invalid_argument("multiset size out of range 1..64");
    idx_.assign(static_cast<std::size_t>(n), 0);
}

std::optional<DigitMultiset> MultisetEnumerator::next() {
    if (done_)
        return std::nullopt;
    if (first_) {
        first_ = false;
    } else {
        // Successor of a nondecreasing index sequence: bump the rightmost
        // position that can still grow, then level everything after it.
        const int top = static_cast<int>(alphabet_.size()) - 1;
        std::size_t t = idx_.size();
        while (t > 0 && idx_[t - 1] == top)
            --t;
        if (t == 0) {
            done_ = true;
            return std::nullopt;
        }
        int v = idx_[t - 1] + 1;
        for (std::size_t j = t - 1; j < idx_.size(); ++j)
            idx_[j] = v;
    }
    DigitMultiset::Counts counts{};
    for (int i : idx_)
        ++counts[static_cast<std::size_t>(alphabet_[static_cast<std::size_t>(i)])];
    return DigitMultiset::from_counts(counts);
}

std::vector<DigitMultiset> enumerate_multisets(int n, Alphabet alphabet) {
    std::vector<DigitMultiset> out;
    out.reserve(multiset_count(n, alphabet));
    MultisetEnumerator e(n, alphabet);
    while (auto ms = e.next())
        out.push_back(*ms);
    return out;
}

}  // namespace permprime
