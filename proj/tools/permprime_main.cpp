// permprime -- survey digit sets whose permutations give primes, hunt
// full- and maximal-permutation sets, scan repunits.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <permprime/oracle.hpp>
#include <permprime/report.hpp>
#include <permprime/repunit.hpp>
#include <permprime/survey.hpp>

namespace {

using namespace permprime;

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitDiscrepancy = 4;

struct NRange {
    int lo = 0;
    int hi = 0;
};

// "--n 6" or "--n 4..10", both ends inclusive.
std::optional<NRange> parse_n_range(const std::string& text) {
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        try {
            return std::stoi(s);
        } catch (...) {
            return std::nullopt;
        }
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse_int(text);
        if (!v || *v < 1)
            return std::nullopt;
        return NRange{*v, *v};
    }
    auto a = parse_int(text.substr(0, dots));
    auto b = parse_int(text.substr(dots + 2));
    if (!a || !b || *a < 1 || *b < *a)
        return std::nullopt;
    return NRange{*a, *b};
}

struct CommonFlags {
    std::string mode = "1379";
    std::string n_text;
    std::string format = "text";
    std::string out_path;
    std::string leading_zero = "exclude";
    int workers = 1;
    bool allow_long_run = false;
    bool retain_primes = false;
    bool self_check = false;
    bool include_zero = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_mode = true) {
    if (with_mode)
        cmd->add_option("--mode", f.mode, "digit alphabet: 1379 or all")->check(CLI::IsMember({"1379", "all"}));
    cmd->add_option("--n", f.n_text, "digit count, single (6) or range (4..10)")->required();
    cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", f.out_path, "write the table to this path instead of stdout");
    cmd->add_option("--workers", f.workers, "worker thread count (default: $PERMPRIME_WORKERS or 1)");
    cmd->add_flag("--allow-long-run", f.allow_long_run, "lift the digit-count caps (expect long runtimes)");
    cmd->add_option("--leading-zero", f.leading_zero, "how to count leading-zero permutations")
        ->check(CLI::IsMember({"exclude", "count"}));
    cmd->add_flag("--retain-primes", f.retain_primes, "keep the prime list per digit set");
    cmd->add_flag("--self-check", f.self_check, "cross-check small n against the brute-force oracle");
    cmd->add_flag("--include-zero", f.include_zero, "keep digit sets with no primes in the output");
}

int default_workers() {
    if (const char* env = std::getenv("PERMPRIME_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    return 1;
}

SurveyOptions to_options(const CommonFlags& f) {
    if (f.workers < 1)
        throw std::invalid_argument("--workers must be >= 1");
    SurveyOptions o;
    o.policy = (f.leading_zero == "count") ? LeadingZeroPolicy::count_all : LeadingZeroPolicy::exclude;
    o.workers = f.workers;
    o.retain_primes = f.retain_primes;
    o.allow_long_run = f.allow_long_run;
    return o;
}

SurveyResult run_survey(const std::string& mode, int n, const SurveyOptions& options) {
    return mode == "all" ? survey_all(n, options) : survey_1379(n, options);
}

std::vector<DsRecord> visible_records(const SurveyResult& result, bool include_zero) {
    std::vector<DsRecord> rows;
    for (const DsRecord& r : result.records)
        if (include_zero || r.c >= 1)
            rows.push_back(r);
    return rows;
}

// Oracle bounds small enough that a full cross-check stays instant.
bool oracle_applicable(const std::string& mode, int n) {
    return mode == "all" ? n <= 5 : n <= 6;
}

// Returns false (after reporting) on any mismatch with the oracle.
bool self_check_records(const SurveyResult& result, const std::string& mode, int n, LeadingZeroPolicy policy) {
    if (!oracle_applicable(mode, n)) {
        std::cerr << "self-check: n=" << n << " is beyond the oracle range for mode " << mode << ", skipped\n";
        return true;
    }
    Alphabet alphabet = (mode == "all") ? Alphabet::all_digits() : Alphabet::d1379();
    std::size_t next_record = 0;
    for (const DigitMultiset& ms : enumerate_multisets(n, alphabet)) {
        std::uint64_t want_c = oracle::prime_arrangements(ms, policy);
        std::uint64_t want_p = oracle::all_arrangements(ms, policy).size();
        const DsRecord* rec = nullptr;
        if (next_record < result.records.size() && result.records[next_record].ds == ms)
            rec = &result.records[next_record++];
        std::uint64_t got_c = rec ? rec->c : 0;
        std::uint64_t got_p = rec ? rec->p : valid_permutations(ms, policy);
        if (got_c != want_c || got_p != want_p) {
            std::cerr << "self-check MISMATCH at ds=" << ms.to_string() << ": survey says c=" << got_c
                      << " p=" << got_p << ", oracle says c=" << want_c << " p=" << want_p << "\n";
            return false;
        }
    }
    if (next_record != result.records.size()) {
        std::cerr << "self-check MISMATCH: survey carries records outside the enumeration\n";
        return false;
    }
    std::cerr << "self-check: n=" << n << " (" << mode << ") agrees with the oracle\n";
    return true;
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

int cmd_survey(const CommonFlags& f) {
    auto range = parse_n_range(f.n_text);
    if (!range) {
        std::cerr << "survey: --n must be a positive integer or range a..b\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    OutputFormat format = *parse_format(f.format);
    OutputTarget target(f.out_path);

    std::vector<DsRecord> merged;
    std::vector<SurveySummary> summaries;
    for (int n = range->lo; n <= range->hi; ++n) {
        SurveyResult result = run_survey(f.mode, n, options);
        if (f.self_check && !self_check_records(result, f.mode, n, options.policy))
            return kExitDiscrepancy;
        auto rows = visible_records(result, f.include_zero);
        if (format == OutputFormat::text) {
            if (n != range->lo)
                target.stream() << '\n';
            target.stream() << render_table(rows, TableSpec{format, false});
            SurveySummary s[] = {result.summary};
            target.stream() << npd_report(s);
        } else {
            merged.insert(merged.end(), rows.begin(), rows.end());
        }
        summaries.push_back(result.summary);
    }
    if (format != OutputFormat::text) {
        target.stream() << render_table(merged, TableSpec{format, false});
        std::ostream& aside = target.to_file() ? std::cout : std::cerr;
        aside << npd_report(summaries);
    }
    return 0;
}

int cmd_fullperm(const CommonFlags& f) {
    auto range = parse_n_range(f.n_text);
    if (!range) {
        std::cerr << "fullperm: --n must be a positive integer or range a..b\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    OutputTarget target(f.out_path);
    for (int n = range->lo; n <= range->hi; ++n) {
        SurveyResult result = run_survey(f.mode, n, options);
        if (f.self_check && !self_check_records(result, f.mode, n, options.policy))
            return kExitDiscrepancy;
        auto sets = find_full_permutation_sets(result.records);
        target.stream() << "n=" << n << ": ";
        if (sets.empty()) {
            target.stream() << "none found\n";
        } else {
            for (std::size_t i = 0; i < sets.size(); ++i)
                target.stream() << (i ? " " : "") << sets[i].to_string();
            target.stream() << '\n';
        }
    }
    return 0;
}

int cmd_maximal(const CommonFlags& f, int top) {
    auto range = parse_n_range(f.n_text);
    if (!range) {
        std::cerr << "maximal: --n must be a positive integer or range a..b\n";
        return kExitUsage;
    }
    if (top < 1) {
        std::cerr << "maximal: --top must be >= 1\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    OutputFormat format = *parse_format(f.format);
    OutputTarget target(f.out_path);
    for (int n = range->lo; n <= range->hi; ++n) {
        SurveyResult result = run_survey(f.mode, n, options);
        if (f.self_check && !self_check_records(result, f.mode, n, options.policy))
            return kExitDiscrepancy;
        auto tier = find_maximal(result.records, static_cast<std::size_t>(top));
        if (format == OutputFormat::text && range->lo != range->hi)
            target.stream() << "n=" << n << ":\n";
        target.stream() << render_table(tier, TableSpec{format, true});
    }
    return 0;
}

int cmd_repunit(int max_n, int workers, const std::string& out_path) {
    RepunitScanOptions options;
    options.workers = workers;
    auto hits = scan_repunit_primes(max_n, options);
    OutputTarget target(out_path);
    bool any_probable = false;
    for (const RepunitResult& r : hits) {
        target.stream() << "R(" << r.exponent << ")";
        if (r.exponent <= 20) {
            target.stream() << " = " << repunit(r.exponent).to_decimal();
        } else {
            target.stream() << " [" << r.exponent << " digits]";
        }
        target.stream() << ": " << to_string(r.verdict.kind);
        if (r.verdict.method == Method::bpsw) {
            target.stream() << " (BPSW + " << options.confirm_rounds << " rounds)";
            any_probable = true;
        } else if (r.verdict.method == Method::miller_rabin_deterministic) {
            target.stream() << " (deterministic Miller-Rabin)";
        }
        target.stream() << '\n';
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        target.stream() << (i ? ", " : "") << hits[i].exponent
                        << (hits[i].verdict.kind == Verdict::probable_prime ? "*" : "");
    }
    target.stream() << '\n';
    if (any_probable)
        target.stream() << "(* probable prime, not a primality proof)\n";
    return 0;
}

int cmd_digitfreq(const CommonFlags& f) {
    auto range = parse_n_range(f.n_text);
    if (!range || range->lo != range->hi) {
        std::cerr << "digitfreq: --n must be a single positive integer\n";
        return kExitUsage;
    }
    int n = range->lo;
    DigitFrequency freq = digit_frequency(n, to_options(f));
    OutputFormat format = *parse_format(f.format);
    OutputTarget target(f.out_path);
    if (format == OutputFormat::csv) {
        target.stream() << "digit,count\n";
        for (int d = 0; d <= 9; ++d)
            target.stream() << d << ',' << freq.counts[static_cast<std::size_t>(d)] << '\n';
    } else if (format == OutputFormat::json) {
        target.stream() << "{\"n\": " << n << ", \"counts\": [";
        for (int d = 0; d <= 9; ++d)
            target.stream() << (d ? ", " : "") << freq.counts[static_cast<std::size_t>(d)];
        target.stream() << "]}\n";
    } else {
        target.stream() << "digit occurrences across all " << n << "-digit primes:\n";
        for (int d = 0; d <= 9; ++d)
            target.stream() << d << ": " << freq.counts[static_cast<std::size_t>(d)] << '\n';
    }
    return 0;
}

int cmd_npd(const CommonFlags& f) {
    auto range = parse_n_range(f.n_text);
    if (!range) {
        std::cerr << "npd: --n must be a positive integer or range a..b\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    OutputTarget target(f.out_path);
    std::vector<SurveySummary> summaries;
    for (int n = range->lo; n <= range->hi; ++n) {
        if (f.mode == "all" && n > options.cap_all && n <= 10 && !f.allow_long_run) {
            // P comes from a plain sieve count; D would need the full survey.
            SurveySummary s;
            s.n = n;
            s.big_p = count_ndigit_primes(n);
            summaries.push_back(s);
            continue;
        }
        summaries.push_back(run_survey(f.mode, n, options).summary);
    }
    target.stream() << npd_report(summaries);
    return 0;
}

int cmd_ratios(const CommonFlags& f) {
    auto range = parse_n_range(f.n_text);
    if (!range) {
        std::cerr << "ratios: --n must be a positive integer or range a..b\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    OutputTarget target(f.out_path);
    std::vector<SurveySummary> s1379, sall;
    for (int n = range->lo; n <= range->hi; ++n) {
        s1379.push_back(survey_1379(n, options).summary);
        if (n <= options.cap_all || (f.allow_long_run && n <= 10))
            sall.push_back(survey_all(n, options).summary);
    }
    auto rows = ratio_table(s1379, sall);
    // Rows outside the all-mode reach still print, with "?" in that column.
    for (int n = range->lo; n <= range->hi; ++n) {
        bool present = false;
        for (const RatioTableRow& r : rows)
            present |= (r.n == n);
        if (!present)
            rows.push_back(RatioTableRow{n, std::nullopt, std::nullopt});
    }
    target.stream() << render_ratio_table(rows, *parse_format(f.format));
    return 0;
}

int cmd_curve(const CommonFlags& f, const std::string& curve_format) {
    auto range = parse_n_range(f.n_text);
    if (!range || range->lo != range->hi) {
        std::cerr << "curve: --n must be a single positive integer\n";
        return kExitUsage;
    }
    SurveyOptions options = to_options(f);
    SurveyResult result = run_survey(f.mode, range->lo, options);
    auto rows = visible_records(result, f.include_zero);
    CurveSeries series = curve_data(rows);
    OutputTarget target(f.out_path);
    if (curve_format == "svg")
        target.stream() << curve_svg(series);
    else if (curve_format == "json")
        target.stream() << curve_json(series);
    else
        target.stream() << curve_csv(series);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surveys of digit multisets whose permutations yield primes"};
    app.require_subcommand(1);

    CommonFlags survey_flags, fullperm_flags, maximal_flags, digitfreq_flags, npd_flags, ratios_flags, curve_flags;
    survey_flags.workers = fullperm_flags.workers = maximal_flags.workers = digitfreq_flags.workers =
        npd_flags.workers = ratios_flags.workers = curve_flags.workers = default_workers();

    CLI::App* survey = app.add_subcommand("survey", "per-digit-set table of permutation and prime counts");
    add_common(survey, survey_flags);

    CLI::App* fullperm = app.add_subcommand("fullperm", "digit sets whose every permutation is prime (c = p)");
    add_common(fullperm, fullperm_flags);

    CLI::App* maximal = app.add_subcommand("maximal", "digit sets with the most prime permutations");
    int top = 3;
    add_common(maximal, maximal_flags);
    maximal->add_option("--top", top, "how many top records to keep (ties included)");

    CLI::App* repunit_cmd = app.add_subcommand("repunit", "scan repunit exponents for (probable) primes");
    int repunit_max = 1031;
    int repunit_workers = default_workers();
    std::string repunit_out;
    repunit_cmd->add_option("--max", repunit_max, "largest exponent to scan")->required();
    repunit_cmd->add_option("--workers", repunit_workers, "worker thread count");
    repunit_cmd->add_option("--out", repunit_out, "write results to this path");

    CLI::App* digitfreq = app.add_subcommand("digitfreq", "digit occurrence counts across all n-digit primes");
    add_common(digitfreq, digitfreq_flags, /*with_mode=*/false);

    CLI::App* npd = app.add_subcommand("npd", "N - P - D summary lines");
    add_common(npd, npd_flags);

    CLI::App* ratios = app.add_subcommand("ratios", "primes-per-digit-set ratio table, both alphabets");
    add_common(ratios, ratios_flags, /*with_mode=*/false);

    CLI::App* curve = app.add_subcommand("curve", "per-record (index, c, p) series for plotting");
    std::string curve_format = "csv";
    add_common(curve, curve_flags);
    curve->add_option("--curve-format", curve_format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (survey->parsed())
            return cmd_survey(survey_flags);
        if (fullperm->parsed())
            return cmd_fullperm(fullperm_flags);
        if (maximal->parsed())
            return cmd_maximal(maximal_flags, top);
        if (repunit_cmd->parsed())
            return cmd_repunit(repunit_max, repunit_workers, repunit_out);
        if (digitfreq->parsed())
            return cmd_digitfreq(digitfreq_flags);
        if (npd->parsed())
            return cmd_npd(npd_flags);
        if (ratios->parsed())
            return cmd_ratios(ratios_flags);
        if (curve->parsed())
            return cmd_curve(curve_flags, curve_format);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
