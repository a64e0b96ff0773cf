#include <permprime/report.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace permprime {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "text")
        return OutputFormat::text;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    return std::nullopt;
}

namespace {

double cp_ratio(const DsRecord& r) {
    return r.p == 0 ? 0.0 : static_cast<double>(r.c) / static_cast<double>(r.p);
}

// "0.4833" -> ".4833": text tables print sub-unit ratios with a bare dot.
std::string dotted_ratio(double v) {
    std::string s = format_ratio(v);
    if (s.size() > 1 && s[0] == '0' && s[1] == '.')
        s.erase(0, 1);
    return s;
}

std::string render_text(std::span<const DsRecord> records, bool with_ratio) {
    std::size_t wb = 1, wc = 1, wp = 1;
    for (const DsRecord& r : records) {
        wb = std::max(wb, r.ds.to_string().size());
        wc = std::max(wc, std::to_string(r.c).size());
        wp = std::max(wp, std::to_string(r.p).size());
    }
    std::ostringstream out;
    auto row = [&](std::string_view b, std::string_view c, std::string_view p, std::string_view ratio) {
        out << b;
        out << std::string(wb - b.size() + 2 + wc - c.size(), ' ') << c;
        out << std::string(2 + wp - p.size(), ' ') << p;
        if (with_ratio)
            out << "  " << ratio;
        out << '\n';
    };
    row("b", "c", "p", "c/p");
    std::size_t width = wb + wc + wp + 4 + (with_ratio ? 8 : 0);
    out << std::string(width, '=') << '\n';
    for (const DsRecord& r : records)
        row(r.ds.to_string(), std::to_string(r.c), std::to_string(r.p), dotted_ratio(cp_ratio(r)));
    return out.str();
}

std::string render_csv(std::span<const DsRecord> records, bool with_ratio) {
    std::string out = with_ratio ? "ds,c,p,cp_ratio\n" : "ds,c,p\n";
    for (const DsRecord& r : records) {
        out += r.ds.to_string();
        out += ',';
        out += std::to_string(r.c);
        out += ',';
        out += std::to_string(r.p);
        if (with_ratio) {
            out += ',';
            out += format_ratio(cp_ratio(r));
        }
        out += '\n';
    }
    return out;
}

std::string render_json(std::span<const DsRecord> records, bool with_ratio) {
    std::string out = "[\n";
    bool first = true;
    for (const DsRecord& r : records) {
        if (!first)
            out += ",\n";
        first = false;
        out += "  {\"ds\": \"" + r.ds.to_string() + "\", \"c\": " + std::to_string(r.c) +
               ", \"p\": " + std::to_string(r.p);
        if (with_ratio)
            out += ", \"cp_ratio\": " + format_ratio(cp_ratio(r));
        out += "}";
    }
    out += "\n]\n";
    return out;
}

}  // namespace

std::string render_table(std::span<const DsRecord> records, const TableSpec& spec) {
    switch (spec.format) {
        case OutputFormat::text: return render_text(records, spec.with_ratio);
        case OutputFormat::csv: return render_csv(records, spec.with_ratio);
        case OutputFormat::json: return render_json(records, spec.with_ratio);
    }
    throw std::logic_error("unreachable");
}

std::vector<DsRecord> parse_table_csv(std::string_view csv) {
    std::vector<DsRecord> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < csv.size()) {
        std::size_t eol = csv.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = csv.size();
        std::string_view line = csv.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty())
            continue;
        if (header) {
            if (line != "ds,c,p" && line != "ds,c,p,cp_ratio")
                throw std::invalid_argument("unrecognized csv header: " + std::string(line));
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t f = 0;
        while (true) {
            std::size_t comma = line.find(',', f);
            if (comma == std::string_view::npos) {
                fields.emplace_back(line.substr(f));
                break;
            }
            fields.emplace_back(line.substr(f, comma - f));
            f = comma + 1;
        }
        if (fields.size() != 3 && fields.size() != 4)
            throw std::invalid_argument("csv row must have 3 or 4 fields");
        DsRecord rec{canonicalize(fields[0]), std::stoull(fields[2]), std::stoull(fields[1]), std::nullopt};
        out.push_back(std::move(rec));
    }
    if (header)
        throw std::invalid_argument("csv is missing its header row");
    return out;
}

CurveSeries curve_data(std::span<const DsRecord> records) {
    CurveSeries s;
    s.points.reserve(records.size());
    std::size_t i = 0;
    for (const DsRecord& r : records)
        s.points.push_back(CurvePoint{++i, r.c, r.p});
    return s;
}

std::string curve_csv(const CurveSeries& series) {
    std::string out = "index,c,p\n";
    for (const CurvePoint& pt : series.points)
        out += std::to_string(pt.index) + "," + std::to_string(pt.c) + "," + std::to_string(pt.p) + "\n";
    return out;
}

std::string curve_json(const CurveSeries& series) {
    std::string out = "[\n";
    bool first = true;
    for (const CurvePoint& pt : series.points) {
        if (!first)
            out += ",\n";
        first = false;
        out += "  {\"index\": " + std::to_string(pt.index) + ", \"c\": " + std::to_string(pt.c) +
               ", \"p\": " + std::to_string(pt.p) + "}";
    }
    out += "\n]\n";
    return out;
}

std::string curve_svg(const CurveSeries& series) {
    std::uint64_t max_p = 1;
    for (const CurvePoint& pt : series.points)
        max_p = std::max(max_p, pt.p);
    std::size_t max_i = std::max<std::size_t>(series.points.size(), 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << max_i << " " << max_p << "\">\n";
    auto polyline = [&](auto value_of, const char* stroke) {
        out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << (max_p / 200.0 + 0.5)
            << "\" points=\"";
        bool first = true;
        for (const CurvePoint& pt : series.points) {
            if (!first)
                out << ' ';
            first = false;
            // flip y so larger values sit higher
            out << pt.index << ',' << (max_p - value_of(pt));
        }
        out << "\"/>\n";
    };
    polyline([](const CurvePoint& pt) { return pt.p; }, "black");
    polyline([](const CurvePoint& pt) { return pt.c; }, "gray");
    out << "</svg>\n";
    return out.str();
}

std::string npd_report(std::span<const SurveySummary> summaries) {
    if (summaries.empty())
        throw std::invalid_argument("npd report needs at least one summary");
    std::string out;
    for (const SurveySummary& s : summaries) {
        out += std::to_string(s.n) + " - " + std::to_string(s.big_p) + " - ";
        out += s.big_d ? std::to_string(*s.big_d) : "?";
        out += '\n';
    }
    return out;
}

std::string render_ratio_table(std::span<const RatioTableRow> rows, OutputFormat format) {
    auto cell = [](const std::optional<double>& v) { return v ? format_ratio(*v) : std::string("?"); };
    if (format == OutputFormat::csv) {
        std::string out = "n,ratio_1379,ratio_all\n";
        for (const RatioTableRow& r : rows)
            out += std::to_string(r.n) + "," + cell(r.mode_1379) + "," + cell(r.mode_all) + "\n";
        return out;
    }
    if (format == OutputFormat::json) {
        std::string out = "[\n";
        bool first = true;
        for (const RatioTableRow& r : rows) {
            if (!first)
                out += ",\n";
            first = false;
            out += "  {\"n\": " + std::to_string(r.n);
            out += ", \"ratio_1379\": " + (r.mode_1379 ? format_ratio(*r.mode_1379) : std::string("null"));
            out += ", \"ratio_all\": " + (r.mode_all ? format_ratio(*r.mode_all) : std::string("null"));
            out += "}";
        }
        out += "\n]\n";
        return out;
    }
    std::size_t w1 = 4, w2 = 3;
    for (const RatioTableRow& r : rows) {
        w1 = std::max(w1, cell(r.mode_1379).size());
        w2 = std::max(w2, cell(r.mode_all).size());
    }
    std::ostringstream out;
    auto row = [&](std::string_view n, std::string_view a, std::string_view b) {
        out << std::string(2 - std::min<std::size_t>(2, n.size()), ' ') << n;
        out << std::string(2 + w1 - a.size(), ' ') << a;
        out << std::string(2 + w2 - b.size(), ' ') << b << '\n';
    };
    row("N", "1379", "all");
    out << std::string(4 + w1 + w2 + 2, '=') << '\n';
    for (const RatioTableRow& r : rows)
        row(std::to_string(r.n), cell(r.mode_1379), cell(r.mode_all));
    return out.str();
}

}  // namespace permprime
