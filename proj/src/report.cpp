#include "acs/report.hpp"

#include <sstream>
#include <stdexcept>

namespace acs {

namespace {

json strings(std::span<const BigInt> values)
{
    json arr = json::array();
    for (const BigInt& v : values)
        arr.push_back(v.str());
    return arr;
}

std::string joined(std::span<const BigInt> values, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += sep;
        out += values[i].str();
    }
    return out;
}

Verdict verdict_from_name(const std::string& s)
{
    if (s == "exists")
        return Verdict::Exists;
    if (s == "not_exists")
        return Verdict::NotExists;
    if (s == "unknown")
        return Verdict::Unknown;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

Reason::Outcome outcome_from_name(const std::string& s)
{
    using O = Reason::Outcome;
    for (O o : {O::Obstructs, O::Passes, O::NotApplicable, O::Constructs, O::Open})
        if (outcome_name(o) == s)
            return o;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

std::string md_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '|')
            out += "\\|";
        else
            out += c;
    }
    return out;
}

} // namespace

json reason_json(const Reason& r)
{
    return {{"rule", r.rule}, {"statement", r.statement}, {"citation", r.citation}, {"outcome", outcome_name(r.outcome)}};
}

Reason reason_from_json(const json& j)
{
    return Reason{j.at("rule").get<std::string>(), j.at("statement").get<std::string>(),
                  j.at("citation").get<std::string>(), outcome_from_name(j.at("outcome").get<std::string>())};
}

json to_json(const ReportRecord& rec)
{
    json j = json::object();
    j["query"] = rec.query;
    j["verdict"] = rec.verdict ? json(verdict_name(*rec.verdict)) : json(nullptr);
    json reasons = json::array();
    for (const Reason& r : rec.reasons)
        reasons.push_back(reason_json(r));
    j["reasons"] = reasons;
    for (const auto& [key, value] : rec.payload.items())
        j[key] = value;
    j["meta"] = {{"version", rec.version}, {"elapsed_ms", rec.elapsed_ms}};
    return j;
}

ReportRecord record_from_json(const json& j)
{
    ReportRecord rec;
    rec.query = j.at("query");
    if (!j.at("verdict").is_null())
        rec.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    for (const json& r : j.at("reasons"))
        rec.reasons.push_back(reason_from_json(r));
    for (const auto& [key, value] : j.items()) {
        if (key != "query" && key != "verdict" && key != "reasons" && key != "meta")
            rec.payload[key] = value;
    }
    rec.version = j.at("meta").at("version").get<std::string>();
    rec.elapsed_ms = j.at("meta").at("elapsed_ms").get<std::int64_t>();
    return rec;
}

json solution_json(const KDecomposition& dec)
{
    const RingSpec& spec = dec.spec;
    json j;
    j["b"] = strings(dec.b);
    j["d_sphere"] = spec.m == 1 ? json(dec.d_sphere.str()) : json(nullptr);
    j["d"] = strings(dec.d);
    j["d_top"] = d_top_relevant(spec) ? json(dec.d_top.str()) : json(nullptr);
    j["sign_eta"] = sign_eta_relevant(spec) ? json(std::string(1, sign_char(dec.sign_eta))) : json(nullptr);
    j["sign_a3"] = d_top_relevant(spec) ? json(std::string(1, sign_char(dec.sign_a3))) : json(nullptr);
    j["residual"] = acs_equation_residual(dec).str();
    return j;
}

json solution_set_payload(const SolutionSet& set)
{
    json sols = json::array();
    for (const KDecomposition& s : set.solutions)
        sols.push_back(solution_json(s));
    json fams = json::array();
    for (const FamilyCertificate& c : set.family_certificates) {
        fams.push_back({{"description", c.description},
                        {"base", solution_json(c.family.base)},
                        {"k_range", {c.k_lo, c.k_hi}},
                        {"verified", c.verified}});
    }
    return {{"solutions", sols},
            {"solution_count", set.solutions.size()},
            {"exhaustive", set.exhaustive},
            {"free_parameters", set.free_parameters},
            {"families", fams}};
}

json poly_json(const TruncPoly& p)
{
    return {{"text", format_poly(p)}, {"x", strings(p.coeffs())}};
}

json class_json(const BiGradedClass& c)
{
    return {{"text", format_class(c)},
            {"m", c.spec().m},
            {"n", c.spec().n},
            {"x", strings(c.even().coeffs())},
            {"y", strings(c.odd().coeffs())}};
}

json table_payload(const std::string& kind, const std::vector<TableCell>& cells)
{
    const bool dold = kind == "dold";
    json arr = json::array();
    for (const TableCell& cell : cells) {
        const Reason& r = cell.decision.decisive_reason();
        arr.push_back({{dold ? "p" : "m", cell.first},
                       {dold ? "q" : "n", cell.second},
                       {"verdict", verdict_name(cell.decision.verdict)},
                       {"reason", reason_json(r)}});
    }
    return {{"cells", arr}};
}

std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string decision_csv(const std::string& kind, int first, int second, const Decision& d)
{
    std::ostringstream out;
    out << kDecisionCsvHeader << "\n"
        << kind << "," << first << "," << second << "," << verdict_name(d.verdict) << ","
        << csv_escape(d.decisive_reason().rule) << "\n";
    return out.str();
}

std::string decision_md(const std::string& kind, int first, int second, const Decision& d)
{
    std::ostringstream out;
    out << "**" << kind << " (" << first << ", " << second << "): " << verdict_name(d.verdict) << "**\n\n"
        << "| rule | outcome | statement | citation |\n|---|---|---|---|\n";
    for (const Reason& r : d.reasons)
        out << "| " << md_escape(r.rule) << " | " << outcome_name(r.outcome) << " | " << md_escape(r.statement) << " | "
            << md_escape(r.citation) << " |\n";
    return out.str();
}

std::string table_csv(const std::string& kind, const std::vector<TableCell>& cells)
{
    std::ostringstream out;
    out << kDecisionCsvHeader << "\n";
    for (const TableCell& c : cells)
        out << kind << "," << c.first << "," << c.second << "," << verdict_name(c.decision.verdict) << ","
            << csv_escape(c.decision.decisive_reason().rule) << "\n";
    return out.str();
}

std::string table_md(const std::string& kind, const std::vector<TableCell>& cells)
{
    const bool dold = kind == "dold";
    std::ostringstream out;
    out << "| " << (dold ? "p" : "m") << " | " << (dold ? "q" : "n") << " | verdict | rule |\n|---|---|---|---|\n";
    for (const TableCell& c : cells)
        out << "| " << c.first << " | " << c.second << " | " << verdict_name(c.decision.verdict) << " | "
            << md_escape(c.decision.decisive_reason().rule) << " |\n";
    return out.str();
}

std::string solutions_csv(const SolutionSet& set)
{
    std::ostringstream out;
    out << kSolutionCsvHeader << "\n";
    for (const KDecomposition& s : set.solutions) {
        const json j = solution_json(s);
        auto opt = [&](const char* key) { return j[key].is_null() ? std::string() : j[key].get<std::string>(); };
        out << set.space.m << "," << set.space.n << "," << joined(s.b, ';') << "," << opt("d_sphere") << ","
            << joined(s.d, ';') << "," << opt("d_top") << "," << opt("sign_eta") << "," << opt("sign_a3") << ","
            << j["residual"].get<std::string>() << "\n";
    }
    return out.str();
}

std::string solutions_md(const SolutionSet& set)
{
    std::ostringstream out;
    out << "S^" << 2 * set.space.m << " x CP^" << set.space.n << ": " << set.solutions.size() << " solution(s), exhaustive "
        << (set.exhaustive ? "yes" : "no") << "\n\n"
        << "| b | d_sphere | d | d_top | sign_eta | sign_a3 |\n|---|---|---|---|---|---|\n";
    for (const KDecomposition& s : set.solutions) {
        const json j = solution_json(s);
        auto opt = [&](const char* key) { return j[key].is_null() ? std::string() : j[key].get<std::string>(); };
        out << "| " << joined(s.b, ',') << " | " << opt("d_sphere") << " | " << joined(s.d, ',') << " | " << opt("d_top")
            << " | " << opt("sign_eta") << " | " << opt("sign_a3") << " |\n";
    }
    return out.str();
}

std::string class_csv(const BiGradedClass& c)
{
    std::ostringstream out;
    out << kClassCsvHeader << "\n";
    for (int j = 0; j <= c.spec().n; ++j)
        out << "x," << j << "," << c.even()[j] << "\n";
    for (int j = 0; j <= c.spec().n; ++j)
        out << "y," << j << "," << c.odd()[j] << "\n";
    return out.str();
}

std::string class_md(const BiGradedClass& c)
{
    std::ostringstream out;
    out << "`" << format_class(c) << "`\n\n| degree | x^j | y x^j |\n|---|---|---|\n";
    for (int j = 0; j <= c.spec().n; ++j)
        out << "| " << j << " | " << c.even()[j] << " | " << c.odd()[j] << " |\n";
    return out.str();
}

std::string poly_csv(const TruncPoly& p)
{
    std::ostringstream out;
    out << kClassCsvHeader << "\n";
    for (int j = 0; j <= p.n(); ++j)
        out << "x," << j << "," << p[j] << "\n";
    return out.str();
}

std::string poly_md(const TruncPoly& p)
{
    std::ostringstream out;
    out << "`" << format_poly(p) << "`\n\n| degree | x^j |\n|---|---|\n";
    for (int j = 0; j <= p.n(); ++j)
        out << "| " << j << " | " << p[j] << " |\n";
    return out.str();
}

} // namespace acs
