#ifndef ACS_REPORT_HPP
#define ACS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "acs/decide.hpp"
#include "acs/diophantine.hpp"

namespace acs {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

/// One CLI result. Integers from the mathematics travel as decimal strings;
/// the timing lives in meta so the payload is reproducible bit for bit.
struct ReportRecord {
    json query = json::object();
    std::optional<Verdict> verdict;
    std::vector<Reason> reasons;
    /// Command specific fields merged into the top level
    /// (solutions, cells, class, ...).
    json payload = json::object();
    std::string version = kVersion;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

json to_json(const ReportRecord& rec);
ReportRecord record_from_json(const json& j);

json reason_json(const Reason& r);
Reason reason_from_json(const json& j);

json solution_json(const KDecomposition& dec);
json solution_set_payload(const SolutionSet& set);
json class_json(const BiGradedClass& c);
json poly_json(const TruncPoly& p);

/// Decision grid cell for `table`.
struct TableCell {
    int first = 0;
    int second = 0;
    Decision decision;
};

json table_payload(const std::string& kind, const std::vector<TableCell>& cells);

// Tabular renderings. Fields are quoted per RFC 4180 when needed.
std::string csv_escape(const std::string& field);

inline constexpr const char* kDecisionCsvHeader = "kind,first,second,verdict,rule";
inline constexpr const char* kSolutionCsvHeader = "m,n,b,d_sphere,d,d_top,sign_eta,sign_a3,residual";
inline constexpr const char* kClassCsvHeader = "part,degree,coefficient";

std::string decision_csv(const std::string& kind, int first, int second, const Decision& d);
std::string decision_md(const std::string& kind, int first, int second, const Decision& d);
std::string table_csv(const std::string& kind, const std::vector<TableCell>& cells);
std::string table_md(const std::string& kind, const std::vector<TableCell>& cells);
std::string solutions_csv(const SolutionSet& set);
std::string solutions_md(const SolutionSet& set);
std::string class_csv(const BiGradedClass& c);
std::string class_md(const BiGradedClass& c);
std::string poly_csv(const TruncPoly& p);
std::string poly_md(const TruncPoly& p);

} // namespace acs

#endif
