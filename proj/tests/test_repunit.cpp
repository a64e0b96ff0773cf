#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <permprime/repunit.hpp>

using namespace permprime;

TEST_CASE("repunit construction") {
    CHECK(repunit(2).to_u64() == 11);
    CHECK(repunit(5).to_u64() == 11111);
    CHECK(repunit(1).to_u64() == 1);
    WideNat r19 = repunit(19);
    CHECK(r19.digit_count() == 19);
    CHECK(r19.to_decimal() == std::string(19, '1'));
    CHECK(repunit(19) == (WideNat::pow10(19) - WideNat(1)) / WideNat(9));
    CHECK_THROWS_AS(repunit(0), std::invalid_argument);
}

TEST_CASE("repunit with a composite exponent is divisible by its part") {
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; a * b <= 20; ++b)
            CHECK((repunit(a * b) % repunit(a)).is_zero());
}

TEST_CASE("scan finds the known exponents up to 30") {
    auto hits = scan_repunit_primes(30);
    REQUIRE(hits.size() == 3);
    CHECK(hits[0].exponent == 2);
    CHECK(hits[1].exponent == 19);
    CHECK(hits[2].exponent == 23);
    // R2 = 11 and R19 fit the exact machinery; R23 sits below the
    // deterministic Miller-Rabin bound, so all three verdicts are proofs.
    CHECK(hits[0].verdict.kind == Verdict::prime);
    CHECK(hits[1].verdict.kind == Verdict::prime);
    CHECK(hits[2].verdict.kind == Verdict::prime);
    CHECK(hits[2].verdict.method == Method::miller_rabin_deterministic);
}

TEST_CASE("scan edge cases") {
    auto two = scan_repunit_primes(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].exponent == 2);
    CHECK(scan_repunit_primes(1).empty());
    CHECK(scan_repunit_primes(18).size() == 1);  // only R2 below R19
}

TEST_CASE("parallel scan matches sequential") {
    RepunitScanOptions par;
    par.workers = 4;
    auto seq = scan_repunit_primes(60);
    auto con = scan_repunit_primes(60, par);
    REQUIRE(seq.size() == con.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].exponent == con[i].exponent);
        CHECK(seq[i].verdict == con[i].verdict);
    }
}
