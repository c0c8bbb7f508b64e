#include "cpdirac/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cpdirac {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

std::string contribution_repr(const Contribution& c) {
    std::string out = family_name(c.index.family);
    out += "(";
    bool first = true;
    const auto field = [&](const char* name, Int value) {
        if (!first)
            out += ",";
        out += name;
        out += "=";
        out += std::to_string(value);
        first = false;
    };
    if (c.index.r)
        field("r", *c.index.r);
    if (c.index.s)
        field("s", *c.index.s);
    if (c.index.epsilon)
        field("eps", *c.index.epsilon);
    field("l", c.index.l);
    out += ")=" + c.multiplicity.str();
    return out;
}

// Two-column key/value table with right-padded keys.
std::string kv_table(const std::string& title,
                     const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [key, value] : rows)
        width = std::max(width, key.size());
    std::ostringstream os;
    os << title << "\n";
    for (const auto& [key, value] : rows)
        os << std::left << std::setw(static_cast<int>(width + 2)) << key << value << "\n";
    return os.str();
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [key, value] : rows)
        os << key << "," << value << "\n";
    return os.str();
}

std::string opt_str(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string weight_json(const Weight& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + std::to_string(w[i]);
    return out + "]";
}

std::string spectrum_title(const Spectrum& s) {
    std::string title = s.n ? "normal twist: " : "line-bundle twist: ";
    title += "d=" + std::to_string(s.d);
    if (s.m)
        title += " m=" + std::to_string(*s.m);
    if (s.n)
        title += " n=" + std::to_string(*s.n);
    title += " max-eig=" + std::to_string(s.cutoff);
    return title;
}

} // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "table")
        return OutputFormat::table;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw ValidationError("format must be table, csv or json: got " + name);
}

std::string rational_str(const Rational& value) {
    if (is_integer(value))
        return boost::multiprecision::numerator(value).str();
    return value.str();
}

std::string render_spectrum(const Spectrum& spectrum, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::table: {
        os << spectrum_title(spectrum) << "\n";
        size_t ev_width = std::string("eigenvalue").size();
        size_t mult_width = std::string("multiplicity").size();
        for (const SpectrumEntry& e : spectrum.entries) {
            ev_width = std::max(ev_width, std::to_string(e.eigenvalue).size());
            mult_width = std::max(mult_width, e.multiplicity.str().size());
        }
        os << std::right << std::setw(static_cast<int>(ev_width)) << "eigenvalue" << "  "
           << std::setw(static_cast<int>(mult_width)) << "multiplicity" << "  contributions\n";
        for (const SpectrumEntry& e : spectrum.entries) {
            os << std::setw(static_cast<int>(ev_width)) << e.eigenvalue << "  "
               << std::setw(static_cast<int>(mult_width)) << e.multiplicity.str() << "  ";
            for (size_t i = 0; i < e.contributions.size(); ++i)
                os << (i ? " " : "") << contribution_repr(e.contributions[i]);
            os << "\n";
        }
        if (spectrum.entries.empty())
            os << "(no eigenvalues <= " << spectrum.cutoff << ")\n";
        break;
    }
    case OutputFormat::csv: {
        os << "eigenvalue,multiplicity,family,r,s,epsilon,l\n";
        for (const SpectrumEntry& e : spectrum.entries) {
            for (const Contribution& c : e.contributions)
                os << e.eigenvalue << "," << c.multiplicity.str() << ","
                   << family_name(c.index.family) << "," << opt_str(c.index.r) << ","
                   << opt_str(c.index.s) << "," << opt_str(c.index.epsilon) << "," << c.index.l
                   << "\n";
            os << e.eigenvalue << "," << e.multiplicity.str() << ",TOTAL,,,,\n";
        }
        break;
    }
    case OutputFormat::json: {
        os << "{\"contributions\":[";
        bool first = true;
        for (const SpectrumEntry& e : spectrum.entries)
            for (const Contribution& c : e.contributions) {
                os << (first ? "" : ",") << "{\"eigenvalue\":" << e.eigenvalue;
                if (c.index.epsilon)
                    os << ",\"epsilon\":" << *c.index.epsilon;
                os << ",\"family\":\"" << family_name(c.index.family) << "\"";
                os << ",\"l\":" << c.index.l;
                os << ",\"multiplicity\":\"" << c.multiplicity.str() << "\"";
                if (c.index.r)
                    os << ",\"r\":" << *c.index.r;
                if (c.index.s)
                    os << ",\"s\":" << *c.index.s;
                os << ",\"weight\":" << weight_json(c.highest_weight) << "}";
                first = false;
            }
        os << "],\"d\":" << spectrum.d << ",\"entries\":{";
        for (size_t i = 0; i < spectrum.entries.size(); ++i)
            os << (i ? "," : "") << "\"" << spectrum.entries[i].eigenvalue << "\":\""
               << spectrum.entries[i].multiplicity.str() << "\"";
        os << "},\"kind\":\"" << (spectrum.n ? "normal" : "line-bundle") << "\"";
        if (spectrum.m)
            os << ",\"m\":" << *spectrum.m;
        os << ",\"max_eig\":" << spectrum.cutoff;
        if (spectrum.n)
            os << ",\"n\":" << *spectrum.n;
        os << "}\n";
        break;
    }
    }
    return os.str();
}

std::string render_decomposition(const EmbeddingParams& params,
                                 const std::vector<DecompositionTerm>& terms,
                                 OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::table: {
        os << "normal spinor bundle decomposition: d=" << params.d << " n=" << params.n << "\n";
        os << "power  multiplicity\n";
        BigInt total = 0;
        for (const DecompositionTerm& t : terms) {
            os << std::right << std::setw(5) << t.power << "  " << t.multiplicity.str() << "\n";
            total += t.multiplicity;
        }
        os << "total rank: " << total.str() << "\n";
        break;
    }
    case OutputFormat::csv:
        os << "power,multiplicity\n";
        for (const DecompositionTerm& t : terms)
            os << t.power << "," << t.multiplicity.str() << "\n";
        break;
    case OutputFormat::json: {
        os << "{\"command\":\"decompose\",\"d\":" << params.d << ",\"n\":" << params.n
           << ",\"terms\":[";
        for (size_t i = 0; i < terms.size(); ++i)
            os << (i ? "," : "") << "{\"multiplicity\":\"" << terms[i].multiplicity.str()
               << "\",\"power\":" << terms[i].power << "}";
        os << "]}\n";
        break;
    }
    }
    return os.str();
}

std::string render_lowest(const EmbeddingParams& params, Int lowest, const FamilyMinima& minima,
                          OutputFormat format) {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"d", std::to_string(params.d)},
        {"n", std::to_string(params.n)},
        {"lowest", std::to_string(lowest)},
        {"family1_min", minima.f1 ? std::to_string(*minima.f1) : "-"},
        {"family2_min", std::to_string(minima.f2)},
        {"family3_min", std::to_string(minima.f3)},
    };
    switch (format) {
    case OutputFormat::table:
        return kv_table("lowest eigenvalue of the normal twist", rows);
    case OutputFormat::csv:
        return kv_csv(rows);
    case OutputFormat::json: {
        std::ostringstream os;
        os << "{\"command\":\"lowest\",\"d\":" << params.d << ",\"family_minima\":{";
        if (minima.f1)
            os << "\"F1\":" << *minima.f1 << ",";
        os << "\"F2\":" << minima.f2 << ",\"F3\":" << minima.f3 << "}";
        os << ",\"lowest\":" << lowest << ",\"n\":" << params.n << "}\n";
        return os.str();
    }
    }
    return {};
}

std::string render_bounds(const BoundsReport& report, OutputFormat format) {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"d", std::to_string(report.params.d)},
        {"n", std::to_string(report.params.n)},
        {"alpha_sq", rational_str(report.alpha_sq)},
        {"upper_bound", std::to_string(report.upper_bound)},
        {"mu", report.mu.str()},
        {"scal0", std::to_string(report.scal0)},
        {"kappa1", std::to_string(report.kappa1)},
        {"kirchberg_bound", rational_str(report.kirchberg_bound)},
        {"lowest", std::to_string(report.lowest)},
    };
    switch (format) {
    case OutputFormat::table:
        return kv_table("eigenvalue bounds (alpha^2 = 1)", rows);
    case OutputFormat::csv:
        return kv_csv(rows);
    case OutputFormat::json: {
        std::ostringstream os;
        os << "{\"alpha_sq\":\"" << rational_str(report.alpha_sq) << "\""
           << ",\"command\":\"bounds\""
           << ",\"d\":" << report.params.d << ",\"kappa1\":" << report.kappa1
           << ",\"kirchberg_bound\":\"" << rational_str(report.kirchberg_bound) << "\""
           << ",\"lowest\":" << report.lowest << ",\"mu\":\"" << report.mu.str() << "\""
           << ",\"n\":" << report.params.n << ",\"scal0\":" << report.scal0
           << ",\"upper_bound\":" << report.upper_bound << "}\n";
        return os.str();
    }
    }
    return {};
}

std::string render_sharpness(const SharpnessReport& report, OutputFormat format) {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"d", std::to_string(report.params.d)},
        {"n", std::to_string(report.params.n)},
        {"upper_bound", std::to_string(report.upper_bound)},
        {"mu", report.mu.str()},
        {"mult_zero", report.mult_zero.str()},
        {"mult_bound", report.mult_bound.str()},
        {"cumulative_below", report.cumulative_below.str()},
        {"verdict", verdict_name(report.verdict)},
    };
    switch (format) {
    case OutputFormat::table:
        return kv_table("sharpness of the upper bound", rows);
    case OutputFormat::csv:
        return kv_csv(rows);
    case OutputFormat::json: {
        std::ostringstream os;
        os << "{\"command\":\"sharpness\""
           << ",\"cumulative_below\":\"" << report.cumulative_below.str() << "\""
           << ",\"d\":" << report.params.d << ",\"mu\":\"" << report.mu.str() << "\""
           << ",\"mult_bound\":\"" << report.mult_bound.str() << "\""
           << ",\"mult_zero\":\"" << report.mult_zero.str() << "\""
           << ",\"n\":" << report.params.n << ",\"upper_bound\":" << report.upper_bound
           << ",\"verdict\":\"" << verdict_name(report.verdict) << "\"}\n";
        return os.str();
    }
    }
    return {};
}

std::string render_verify(const EmbeddingParams& params, Int extra_l, const VerifyReport& report,
                          OutputFormat format) {
    const std::string status = report.mismatches == 0 ? "ok" : "failed";
    std::vector<std::pair<std::string, std::string>> rows = {
        {"d", std::to_string(params.d)},
        {"n", std::to_string(params.n)},
        {"max_l", std::to_string(extra_l)},
        {"cases", std::to_string(report.cases)},
        {"mismatches", std::to_string(report.mismatches)},
        {"status", status},
    };
    if (!report.first_mismatch.empty())
        rows.emplace_back("first_mismatch", report.first_mismatch);
    switch (format) {
    case OutputFormat::table:
        return kv_table("oracle cross-check", rows);
    case OutputFormat::csv:
        return kv_csv(rows);
    case OutputFormat::json: {
        std::ostringstream os;
        os << "{\"cases\":" << report.cases << ",\"command\":\"verify\""
           << ",\"d\":" << params.d;
        if (!report.first_mismatch.empty())
            os << ",\"first_mismatch\":\"" << json_escape(report.first_mismatch) << "\"";
        os << ",\"max_l\":" << extra_l << ",\"mismatches\":" << report.mismatches
           << ",\"n\":" << params.n << ",\"status\":\"" << status << "\"}\n";
        return os.str();
    }
    }
    return {};
}

} // namespace cpdirac
