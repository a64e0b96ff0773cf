#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <permprime/digits.hpp>
#include <permprime/oracle.hpp>
#include <permprime/widenat.hpp>

using namespace permprime;

TEST_CASE("canonicalize renders digits in nondecreasing order") {
    CHECK(canonicalize("911").to_string() == "119");
    CHECK(canonicalize("7").to_string() == "7");
    CHECK(canonicalize("331").to_string() == "133");
    CHECK(canonicalize("7799999999").to_string() == "7799999999");
    int digits[] = {9, 1, 1};
    CHECK(canonicalize(digits).to_string() == "119");
}

TEST_CASE("canonicalize rejects bad input") {
    CHECK_THROWS_AS(canonicalize(std::string_view{}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize("12a"), std::invalid_argument);
    int bad[] = {1, 10};
    CHECK_THROWS_AS(canonicalize(std::span<const int>(bad)), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent") {
    for (const char* s : {"911", "0013", "7", "5550", "123456789", "99999"}) {
        DigitMultiset ms = canonicalize(s);
        CHECK(canonicalize(ms.to_string()) == ms);
    }
}

TEST_CASE("multiset equality and order follow the canonical string") {
    CHECK(canonicalize("911") == canonicalize("191"));
    CHECK(canonicalize("11") < canonicalize("113"));
    CHECK(canonicalize("13") < canonicalize("19"));
    CHECK(canonicalize("99") > canonicalize("19"));
    // order agrees with string comparison for a spread of pairs
    const char* keys[] = {"1", "11", "119", "133", "19", "3", "337", "79", "9"};
    for (const char* a : keys)
        for (const char* b : keys) {
            auto lhs = canonicalize(a) <=> canonicalize(b);
            auto rhs = std::string(a) <=> std::string(b);
            CHECK((lhs < 0) == (rhs < 0));
            CHECK((lhs == 0) == (rhs == 0));
        }
}

TEST_CASE("of_value mirrors the decimal digits") {
    CHECK(DigitMultiset::of_value(911).to_string() == "119");
    CHECK(DigitMultiset::of_value(0).to_string() == "0");
    CHECK(DigitMultiset::of_value(1000).to_string() == "0001");
}

TEST_CASE("multinomial permutation counts") {
    CHECK(multinomial_permutations(canonicalize("1379")) == 24);
    CHECK(multinomial_permutations(canonicalize("113")) == 3);
    CHECK(multinomial_permutations(canonicalize("1111111111")) == 1);
    CHECK(multinomial_permutations(canonicalize("11339")) == 30);
    // 20 distinct-digit-free worst case still fits
    CHECK(multinomial_permutations(canonicalize("11223344556677889900")) ==
          2432902008176640000ull / (1024ull));  // 20!/(2!^10)
}

TEST_CASE("multinomial agrees with exhaustive arrangement listing up to 7 digits") {
    for (int n = 1; n <= 7; ++n) {
        MultisetEnumerator e(n, Alphabet::all_digits());
        while (auto ms = e.next()) {
            auto all = oracle::all_arrangements(*ms, LeadingZeroPolicy::count_all);
            CHECK(multinomial_permutations(*ms) == all.size());
        }
    }
}

TEST_CASE("valid_permutations under the exclude policy") {
    CHECK(valid_permutations(canonicalize("011"), LeadingZeroPolicy::exclude) == 2);
    CHECK(valid_permutations(canonicalize("1379"), LeadingZeroPolicy::exclude) == 24);
    CHECK(valid_permutations(canonicalize("0013"), LeadingZeroPolicy::exclude) == 6);
    CHECK(valid_permutations(canonicalize("00"), LeadingZeroPolicy::exclude) == 0);
    CHECK(valid_permutations(canonicalize("0"), LeadingZeroPolicy::exclude) == 0);
    CHECK(valid_permutations(canonicalize("011"), LeadingZeroPolicy::count_all) == 3);
}

TEST_CASE("excluded plus leading-zero arrangements partition the multinomial") {
    for (int n = 1; n <= 6; ++n) {
        MultisetEnumerator e(n, Alphabet::all_digits());
        while (auto ms = e.next()) {
            auto all = oracle::all_arrangements(*ms, LeadingZeroPolicy::count_all);
            auto kept = oracle::all_arrangements(*ms, LeadingZeroPolicy::exclude);
            CHECK(valid_permutations(*ms, LeadingZeroPolicy::exclude) == kept.size());
            CHECK(kept.size() + (all.size() - kept.size()) == multinomial_permutations(*ms));
        }
    }
}

TEST_CASE("alphabet presets and membership") {
    CHECK(Alphabet::d1379().size() == 4);
    CHECK(Alphabet::all_digits().size() == 10);
    CHECK(Alphabet::d1379().contains(7));
    CHECK(!Alphabet::d1379().contains(2));
    CHECK(Alphabet::d1379().digits() == std::vector<int>{1, 3, 7, 9});
    int none[] = {5};
    CHECK(Alphabet::from_digits(std::span<const int>(none, 1)).size() == 1);
    CHECK_THROWS_AS(Alphabet::from_digits({}), std::invalid_argument);
}

TEST_CASE("enumerate_multisets yields the stars-and-bars count in ascending order") {
    auto two = enumerate_multisets(2, Alphabet::d1379());
    REQUIRE(two.size() == 10);
    CHECK(two.front().to_string() == "11");
    CHECK(two.back().to_string() == "99");
    CHECK(enumerate_multisets(10, Alphabet::d1379()).size() == 286);

    auto one = enumerate_multisets(1, Alphabet::all_digits());
    REQUIRE(one.size() == 10);
    for (int d = 0; d <= 9; ++d)
        CHECK(one[static_cast<std::size_t>(d)].to_string() == std::string(1, static_cast<char>('0' + d)));

    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_multisets(n, Alphabet::all_digits());
        CHECK(all.size() == multiset_count(n, Alphabet::all_digits()));
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(all[i - 1] < all[i]);  // strictly increasing, hence duplicate-free
    }
}

TEST_CASE("wide multinomial matches the 64-bit path and handles 64 digits") {
    for (const char* s : {"1379", "113", "11339", "11223344556677889900"})
        CHECK(wide_multinomial(canonicalize(s)) == WideNat(multinomial_permutations(canonicalize(s))));

    // 64 digits: split recurrence multinomial(a+b) = C(a+b, b) * multinomial(a) * multinomial(b)
    DigitMultiset::Counts counts{};
    counts[1] = 32;
    counts[3] = 32;
    WideNat direct = wide_multinomial(DigitMultiset::from_counts(counts));
    CHECK(direct == WideNat::from_decimal("1832624140942590534"));  // C(64,32)
    CHECK(direct == WideNat(multinomial_permutations(DigitMultiset::from_counts(counts))));

    DigitMultiset::Counts big{};
    for (int d = 0; d <= 9; ++d)
        big[static_cast<std::size_t>(d)] = (d < 4) ? 7 : 6;  // 4*7 + 6*6 = 64 digits
    WideNat wide = wide_multinomial(DigitMultiset::from_counts(big));
    CHECK(wide.digit_count() > 20);
    CHECK_THROWS_AS(multinomial_permutations(DigitMultiset::from_counts(big)), std::overflow_error);
}

TEST_CASE("multiset size limits") {
    DigitMultiset::Counts counts{};
    CHECK_THROWS_AS(DigitMultiset::from_counts(counts), std::invalid_argument);
    counts[1] = 65;
    CHECK_THROWS_AS(DigitMultiset::from_counts(counts), std::invalid_argument);
}
