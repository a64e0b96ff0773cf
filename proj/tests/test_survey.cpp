#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include <permprime/oracle.hpp>
#include <permprime/survey.hpp>

using namespace permprime;

namespace {

const DsRecord* find_record(const SurveyResult& result, const std::string& ds) {
    for (const DsRecord& r : result.records)
        if (r.ds.to_string() == ds)
            return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("survey_1379 reproduces the small reference cases") {
    SurveyResult three = survey_1379(3);
    CHECK(three.summary.big_p == 30);
    CHECK(three.summary.big_d == 12);
    const DsRecord* r137 = find_record(three, "137");
    REQUIRE(r137);
    CHECK(r137->c == 3);
    CHECK(r137->p == 6);

    SurveyResult one = survey_1379(1);
    CHECK(one.summary.big_p == 2);
    CHECK(one.summary.big_d == 2);

    SurveyResult six = survey_1379(6);
    const DsRecord* r113779 = find_record(six, "113779");
    REQUIRE(r113779);
    CHECK(r113779->c == 60);
    CHECK(r113779->p == 180);
}

TEST_CASE("survey_1379 keeps zero-prime digit sets out of D but in the records") {
    SurveyResult four = survey_1379(4);
    CHECK(four.records.size() == 35);  // C(7,3) multisets
    CHECK(four.summary.big_d == 14);
    CHECK(four.summary.big_p == 63);
    const DsRecord* r1111 = find_record(four, "1111");
    REQUIRE(r1111);
    CHECK(r1111->c == 0);
    CHECK(r1111->p == 1);
}

TEST_CASE("survey records carry their primes for small n") {
    SurveyResult three = survey_1379(3);
    const DsRecord* r113 = find_record(three, "113");
    REQUIRE(r113);
    REQUIRE(r113->primes.has_value());
    CHECK(*r113->primes == std::vector<std::uint64_t>{113, 131, 311});
    SurveyResult six = survey_1379(6);
    CHECK(!six.records.front().primes.has_value());
    SurveyOptions keep;
    keep.retain_primes = true;
    SurveyResult six_keep = survey_1379(6, keep);
    const DsRecord* kept = find_record(six_keep, "113779");
    REQUIRE(kept);
    REQUIRE(kept->primes.has_value());
    CHECK(kept->primes->size() == 60);
    CHECK(std::is_sorted(kept->primes->begin(), kept->primes->end()));
}

TEST_CASE("survey_all matches the reference aggregates") {
    SurveyResult one = survey_all(1);
    CHECK(one.summary.big_p == 4);
    CHECK(one.summary.big_d == 4);

    SurveyResult two = survey_all(2);
    CHECK(two.summary.big_p == 21);
    CHECK(two.summary.big_d == 17);

    SurveyResult four = survey_all(4);
    CHECK(four.summary.big_p == 1061);
    CHECK(four.summary.big_d == 336);
    CHECK(four.records.size() == 336);  // bucketed: only c >= 1 rows exist
    for (const DsRecord& r : four.records)
        CHECK(r.c >= 1);
}

TEST_CASE("survey_all record order and leading-zero handling") {
    SurveyResult three = survey_all(3);
    CHECK(std::is_sorted(three.records.begin(), three.records.end(),
                         [](const DsRecord& a, const DsRecord& b) { return a.ds < b.ds; }));
    // 101, 103, 107, 109 bucket under zero-bearing digit sets whose p counts
    // only full-length arrangements
    const DsRecord* r011 = find_record(three, "011");
    REQUIRE(r011);
    CHECK(r011->p == 2);   // 101 and 110
    CHECK(r011->c == 1);   // 101
    REQUIRE(r011->primes.has_value());
    CHECK(*r011->primes == std::vector<std::uint64_t>{101});
}

TEST_CASE("mode equivalence: sieve bucketing equals permutation testing") {
    for (int n = 1; n <= 4; ++n) {
        SurveyResult direct = survey_1379(n);
        SurveyResult sieved = survey_all(n);
        std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> from_sieve;
        for (const DsRecord& r : sieved.records) {
            bool only_1379 = true;
            for (int d : {0, 2, 4, 5, 6, 8})
                only_1379 = only_1379 && r.ds.count(d) == 0;
            if (only_1379)
                from_sieve[r.ds.to_string()] = {r.c, r.p};
        }
        std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> from_direct;
        for (const DsRecord& r : direct.records)
            if (r.c >= 1)
                from_direct[r.ds.to_string()] = {r.c, r.p};
        CHECK(from_direct == from_sieve);
    }
}

TEST_CASE("per-record counts agree with the brute-force oracle") {
    for (int n = 1; n <= 5; ++n) {
        SurveyResult result = survey_1379(n);
        for (const DsRecord& r : result.records) {
            CHECK(r.c == oracle::prime_arrangements(r.ds, LeadingZeroPolicy::exclude));
            CHECK(r.c <= r.p);
        }
    }
}

TEST_CASE("parallel and sequential surveys are identical") {
    SurveyOptions seq;
    SurveyResult reference = survey_1379(5, seq);
    for (int workers : {2, 3, 8}) {
        SurveyOptions par;
        par.workers = workers;
        SurveyResult got = survey_1379(5, par);
        REQUIRE(got.records.size() == reference.records.size());
        for (std::size_t i = 0; i < got.records.size(); ++i) {
            CHECK(got.records[i].ds == reference.records[i].ds);
            CHECK(got.records[i].c == reference.records[i].c);
            CHECK(got.records[i].p == reference.records[i].p);
            CHECK(got.records[i].primes == reference.records[i].primes);
        }
    }
}

TEST_CASE("full-permutation sets") {
    CHECK(find_full_permutation_sets(survey_1379(3).records) ==
          std::vector<DigitMultiset>{canonicalize("113"), canonicalize("199"), canonicalize("337")});
    CHECK(find_full_permutation_sets(survey_1379(5).records).empty());
    auto two = find_full_permutation_sets(survey_1379(2).records);
    std::vector<std::string> names;
    for (const DigitMultiset& ms : two)
        names.push_back(ms.to_string());
    CHECK(names == std::vector<std::string>{"11", "13", "17", "37", "79"});
    auto one = find_full_permutation_sets(survey_1379(1).records);
    names.clear();
    for (const DigitMultiset& ms : one)
        names.push_back(ms.to_string());
    CHECK(names == std::vector<std::string>{"3", "7"});
}

TEST_CASE("maximal records with tie expansion") {
    SurveyResult all4 = survey_all(4);
    auto top1 = find_maximal(all4.records, 1);
    REQUIRE(top1.size() == 2);  // tied super-sets
    CHECK(top1[0].ds.to_string() == "1237");
    CHECK(top1[1].ds.to_string() == "1279");
    CHECK(top1[0].c == 11);
    CHECK(top1[1].c == 11);

    auto top4 = find_maximal(all4.records, 4);
    REQUIRE(top4.size() == 4);
    CHECK(top4[2].ds.to_string() == "1579");
    CHECK(top4[3].ds.to_string() == "1789");
    CHECK(top4[2].c == 10);

    SurveyResult ds1379 = survey_1379(4);
    auto top2 = find_maximal(ds1379.records, 2);
    REQUIRE(top2.size() == 2);
    CHECK(top2[0].ds.to_string() == "1139");
    CHECK(top2[0].c == 8);
    CHECK(top2[1].ds.to_string() == "1379");
    CHECK(top2[1].c == 7);

    SurveyResult ds5 = survey_1379(5);
    auto top = find_maximal(ds5.records, 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].ds.to_string() == "13799");
    CHECK(top[0].c == 29);

    CHECK_THROWS_AS(find_maximal(ds5.records, 0), std::invalid_argument);
}

TEST_CASE("digit frequency profiles") {
    DigitFrequency one = digit_frequency(1);
    CHECK(one.counts == std::array<std::uint64_t, 10>{0, 0, 1, 1, 0, 1, 0, 1, 0, 0});

    DigitFrequency two = digit_frequency(2);
    std::uint64_t total = 0;
    for (std::uint64_t c : two.counts)
        total += c;
    CHECK(total == 42);  // 21 two-digit primes, 2 digits each

    DigitFrequency four = digit_frequency(4);
    CHECK(four.counts == std::array<std::uint64_t, 10>{217, 603, 359, 602, 326, 327, 336, 574, 321, 579});
}

TEST_CASE("ratio table formatting and joins") {
    CHECK(format_ratio(10.0 / 6.0) == "1.6667");
    CHECK(format_ratio(1.0) == "1.0000");

    std::vector<SurveySummary> s1379 = {survey_1379(1).summary, survey_1379(2).summary};
    std::vector<SurveySummary> sall = {survey_all(1).summary, survey_all(2).summary};
    auto rows = ratio_table(s1379, sall);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 1);
    CHECK(format_ratio(*rows[0].mode_1379) == "1.0000");
    CHECK(format_ratio(*rows[0].mode_all) == "1.0000");
    CHECK(format_ratio(*rows[1].mode_1379) == "1.6667");
    CHECK(format_ratio(*rows[1].mode_all) == "1.2353");
}

TEST_CASE("caps raise capacity errors without the override") {
    SurveyOptions opts;
    CHECK_THROWS_AS(survey_1379(13, opts), CapacityError);
    CHECK_THROWS_AS(survey_all(9, opts), CapacityError);
    CHECK_THROWS_AS(digit_frequency(9, opts), CapacityError);
    CHECK_THROWS_AS(survey_1379(0, opts), std::invalid_argument);
    opts.allow_long_run = true;
    CHECK_THROWS_AS(survey_all(11, opts), CapacityError);  // past the sieve no matter what
    CHECK_THROWS_AS(survey_1379(20, opts), CapacityError);
}

TEST_CASE("count_ndigit_primes by sieve alone") {
    CHECK(count_ndigit_primes(1) == 4);
    CHECK(count_ndigit_primes(4) == 1061);
}
