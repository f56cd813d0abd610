#include "acs/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "acs/report.hpp"

namespace acs {

namespace {

using Clock = std::chrono::steady_clock;

struct Output {
    std::string format = "json";
    std::string out_file;
};

void add_output_options(CLI::App* cmd, Output& o, bool allow_text = false)
{
    std::vector<std::string> formats{"json", "csv", "md"};
    if (allow_text)
        formats.emplace_back("text");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    cmd->add_option("--out", o.out_file, "Write the report to this file instead of stdout");
}

std::optional<Sign> parse_sign(const std::string& s)
{
    if (s == "+" || s == "plus" || s == "+1" || s == "1")
        return Sign::Plus;
    if (s == "-" || s == "minus" || s == "-1")
        return Sign::Minus;
    if (s == "natural" || s.empty())
        return std::nullopt;
    throw UsageError("sign must be one of +, -, plus, minus, natural (got '" + s + "')");
}

BigInt parse_bigint(const std::string& s)
{
    try {
        std::size_t pos = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (pos == s.size())
            throw std::invalid_argument("");
        for (std::size_t i = pos; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

std::vector<BigInt> to_bigints(const std::vector<std::int64_t>& v)
{
    return {v.begin(), v.end()};
}

class Emitter {
public:
    Emitter(std::ostream& out, Clock::time_point start) : out_(out), start_(start) {}

    void emit(const Output& o, ReportRecord rec, const std::function<std::string()>& tabular)
    {
        rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
        std::string text = (o.format == "json") ? to_json(rec).dump(2) + "\n" : tabular();
        if (o.out_file.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(o.out_file);
        if (!f)
            throw UsageError("cannot open output file '" + o.out_file + "'");
        f << text;
    }

private:
    std::ostream& out_;
    Clock::time_point start_;
};

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::Exists:
        return kExitExists;
    case Verdict::NotExists:
        return kExitNotExists;
    case Verdict::Unknown:
        return kExitUnknown;
    }
    return kExitUnknown;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto start = Clock::now();
    Emitter emitter(out, start);

    CLI::App app{"Chern-class obstructions and almost complex structures on S^{2m} x M", "acs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::function<int()> action;

    // decide -------------------------------------------------------------
    CLI::App* decide = app.add_subcommand("decide", "Decide existence of an almost complex structure");
    decide->require_subcommand(1);
    struct {
        int m = 0, n = 0, p = 0, q = -1;
        std::string chi;
        Output o;
    } dopt;

    auto decide_leaf = [&](const std::string& kind, const std::string& help,
                           const std::function<std::pair<int, int>()>& params,
                           const std::function<Decision()>& run) {
        CLI::App* cmd = decide->add_subcommand(kind, help);
        add_output_options(cmd, dopt.o);
        cmd->callback([&, kind, params, run] {
            action = [&, kind, params, run] {
                const Decision d = run();
                const auto [first, second] = params();
                ReportRecord rec;
                rec.query = {{"command", "decide"}, {"kind", kind}};
                if (kind == "dold") {
                    rec.query["p"] = first;
                    rec.query["q"] = second;
                } else if (kind == "generic") {
                    rec.query["m"] = first;
                    rec.query["chi"] = dopt.chi;
                } else {
                    rec.query["m"] = first;
                    rec.query["n"] = second;
                }
                rec.verdict = d.verdict;
                rec.reasons = d.reasons;
                emitter.emit(dopt.o, rec, [&] {
                    return dopt.o.format == "csv" ? decision_csv(kind, first, second, d)
                                                  : decision_md(kind, first, second, d);
                });
                return verdict_exit(d.verdict);
            };
        });
        return cmd;
    };

    {
        CLI::App* cp = decide_leaf(
            "cp", "S^{2m} x CP^n", [&] { return std::pair{dopt.m, dopt.n}; },
            [&] { return decide_cp(dopt.m, dopt.n); });
        cp->add_option("--m", dopt.m, "sphere half-dimension (>= 1)")->required();
        cp->add_option("--n", dopt.n, "projective dimension (>= 1)")->required();

        CLI::App* sphere = decide_leaf(
            "sphere", "S^{2m} x S^{2n}", [&] { return std::pair{dopt.m, dopt.n}; },
            [&] { return decide_sphere_product(dopt.m, dopt.n); });
        sphere->add_option("--m", dopt.m)->required();
        sphere->add_option("--n", dopt.n)->required();

        CLI::App* dold = decide_leaf(
            "dold", "Dold manifold D(2p, 2q+1)", [&] { return std::pair{dopt.p, dopt.q}; },
            [&] { return decide_dold(dopt.p, dopt.q); });
        dold->add_option("--p", dopt.p, "p >= 1")->required();
        dold->add_option("--q", dopt.q, "q >= 0")->required();

        CLI::App* generic = decide_leaf(
            "generic", "S^{2m} x M from chi(M) alone", [&] { return std::pair{dopt.m, 0}; },
            [&] { return decide_generic({dopt.m, parse_bigint(dopt.chi)}); });
        generic->add_option("--m", dopt.m)->required();
        generic->add_option("--chi", dopt.chi, "Euler characteristic of M (any integer)")->required();
    }

    // enumerate ----------------------------------------------------------
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Search stable classes solving the top Chern equation");
    struct {
        int m = 0, n = 0;
        std::int64_t box = 10;
        std::optional<std::int64_t> box_b, box_d, box_d_sphere, box_d_top;
        std::string fix_signs;
        unsigned threads = 0;
        Output o;
    } eopt;
    enumerate_cmd->add_option("--m", eopt.m)->required();
    enumerate_cmd->add_option("--n", eopt.n)->required();
    enumerate_cmd->add_option("--box", eopt.box, "half-width for every parameter")->capture_default_str();
    enumerate_cmd->add_option("--box-b", eopt.box_b, "half-width override for kernel coordinates");
    enumerate_cmd->add_option("--box-d", eopt.box_d, "half-width override for d_1..d_r");
    enumerate_cmd->add_option("--box-d-sphere", eopt.box_d_sphere, "half-width override for d_sphere");
    enumerate_cmd->add_option("--box-d-top", eopt.box_d_top, "half-width override for d_top");
    enumerate_cmd->add_option("--fix-signs", eopt.fix_signs,
                              "ETA,A3 (each + or -): search only these signs instead of both");
    enumerate_cmd->add_option("--threads", eopt.threads, "worker threads (0 = all cores)");
    add_output_options(enumerate_cmd, eopt.o);
    enumerate_cmd->callback([&] {
        action = [&] {
            const RingSpec spec(eopt.m, eopt.n);
            SearchBox box = SearchBox::uniform(eopt.box);
            if (eopt.box_b)
                box.b = *eopt.box_b;
            if (eopt.box_d)
                box.d = *eopt.box_d;
            if (eopt.box_d_sphere)
                box.d_sphere = *eopt.box_d_sphere;
            if (eopt.box_d_top)
                box.d_top = *eopt.box_d_top;
            box.threads = eopt.threads;
            if (!eopt.fix_signs.empty()) {
                const auto comma = eopt.fix_signs.find(',');
                if (comma == std::string::npos)
                    throw UsageError("--fix-signs expects ETA,A3");
                auto eta = parse_sign(eopt.fix_signs.substr(0, comma));
                auto a3 = parse_sign(eopt.fix_signs.substr(comma + 1));
                box.fixed_signs = std::pair{eta.value_or(natural_eta_sign(spec)),
                                            a3.value_or(natural_tangent_sign(spec.n))};
            }

            ReportRecord rec;
            rec.query = {{"command", "enumerate"}, {"m", eopt.m},         {"n", eopt.n},
                         {"box_b", box.b},         {"box_d", box.d},      {"box_d_sphere", box.d_sphere},
                         {"box_d_top", box.d_top}, {"signs", box.fixed_signs ? eopt.fix_signs : "both"}};

            SolutionSet set;
            try {
                set = enumerate(spec, box);
            } catch (const UnsupportedError& e) {
                rec.verdict = Verdict::Unknown;
                rec.reasons.push_back({"enumeration-unsupported", e.what(),
                                       "only the sphere kernels for m = 1 and even m are parametrised",
                                       Reason::Outcome::Open});
                rec.payload = {{"solutions", json::array()}, {"solution_count", 0}, {"exhaustive", false}};
                emitter.emit(eopt.o, rec, [&] {
                    return eopt.o.format == "csv" ? std::string(kSolutionCsvHeader) + "\n"
                                                  : std::string("unsupported: ") + e.what() + "\n";
                });
                err << "acs: " << e.what() << "\n";
                return kExitUnknown;
            }

            const std::string citation =
                "a closed 2N-manifold is almost complex iff some K-class realifies to the tangent bundle and has "
                "c_N equal to the Euler class; rank-N bundles are classified by stable class in dimension 2N";
            if (!set.solutions.empty()) {
                rec.verdict = Verdict::Exists;
                rec.reasons.push_back({"top-chern-equation",
                                       std::to_string(set.solutions.size()) +
                                           " stable class(es) in the box have c_top equal to the Euler class",
                                       citation, Reason::Outcome::Constructs});
            } else {
                rec.verdict = set.exhaustive ? Verdict::NotExists : Verdict::Unknown;
                rec.reasons.push_back({"top-chern-equation", "no stable class in the box solves the top Chern equation",
                                       citation,
                                       set.exhaustive ? Reason::Outcome::Obstructs : Reason::Outcome::Open});
            }
            if (set.exhaustive) {
                rec.reasons.push_back({"divisor-bound",
                                       "the residual factors as d_sphere * (A d_top + B) = const, so every integer "
                                       "solution has |d_sphere| dividing the constant; all of them lie in the box",
                                       "elementary divisor argument", Reason::Outcome::Passes});
            }
            for (const FamilyCertificate& c : set.family_certificates) {
                rec.reasons.push_back({"affine-family",
                                       c.description + (c.verified ? " solves the equation for k in [" : " FAILS on [") +
                                           std::to_string(c.k_lo) + ", " + std::to_string(c.k_hi) + "]",
                                       "verified by direct residual evaluation",
                                       c.verified ? Reason::Outcome::Constructs : Reason::Outcome::Open});
            }
            rec.payload = solution_set_payload(set);
            emitter.emit(eopt.o, rec,
                         [&] { return eopt.o.format == "csv" ? solutions_csv(set) : solutions_md(set); });
            return set.solutions.empty() ? kExitNotExists : kExitExists;
        };
    });

    // chern --------------------------------------------------------------
    CLI::App* chern = app.add_subcommand("chern", "Evaluate total Chern classes");
    chern->require_subcommand(1);
    struct {
        int m = 1, n = 1, k = 1;
        std::string sign = "natural";
        std::vector<std::int64_t> b, d;
        std::int64_t dtop = 0;
        Output o{"json", {}};
    } copt;

    auto emit_class = [&](const std::string& kind, const json& query_extra, const BiGradedClass& c) {
        ReportRecord rec;
        rec.query = {{"command", "chern"}, {"kind", kind}};
        rec.query.update(query_extra);
        rec.payload = {{"class", class_json(c)}};
        if (copt.o.format == "text") {
            out << format_class(c) << "\n";
            return 0;
        }
        emitter.emit(copt.o, rec, [&] { return copt.o.format == "csv" ? class_csv(c) : class_md(c); });
        return 0;
    };

    {
        CLI::App* wk = chern->add_subcommand("wk", "c(w_k) = c(g^m(H^k - 1) - conjugate)");
        wk->add_option("--m", copt.m)->required();
        wk->add_option("--n", copt.n)->required();
        wk->add_option("--k", copt.k)->required();
        add_output_options(wk, copt.o, true);
        wk->callback([&] {
            action = [&] {
                const RingSpec spec(copt.m, copt.n);
                return emit_class("wk", {{"m", copt.m}, {"n", copt.n}, {"k", copt.k}}, chern_wk(spec, copt.k));
            };
        });

        CLI::App* gen = chern->add_subcommand("g-eta-n", "c(g^m eta^n) = 1 +- (m+n-1)! y x^n");
        gen->add_option("--m", copt.m)->required();
        gen->add_option("--n", copt.n)->required();
        gen->add_option("--sign", copt.sign, "+, - or natural")->capture_default_str();
        add_output_options(gen, copt.o, true);
        gen->callback([&] {
            action = [&] {
                const RingSpec spec(copt.m, copt.n);
                const Sign s = parse_sign(copt.sign).value_or(natural_eta_sign(spec));
                return emit_class("g-eta-n", {{"m", copt.m}, {"n", copt.n}, {"sign", std::string(1, sign_char(s))}},
                                  chern_g_eta_n(spec, s));
            };
        });

        CLI::App* kernel = chern->add_subcommand("kernel", "Chern class of a realification-kernel element");
        kernel->add_option("--m", copt.m)->required();
        kernel->add_option("--n", copt.n)->required();
        kernel->add_option("--b", copt.b, "kernel coordinates b_1,..")->delimiter(',');
        kernel->add_option("--sign", copt.sign, "+, - or natural")->capture_default_str();
        add_output_options(kernel, copt.o, true);
        kernel->callback([&] {
            action = [&] {
                const RingSpec spec(copt.m, copt.n);
                const Sign s = parse_sign(copt.sign).value_or(natural_eta_sign(spec));
                const auto b = to_bigints(copt.b);
                return emit_class("kernel",
                                  {{"m", copt.m}, {"n", copt.n}, {"b", copt.b}, {"sign", std::string(1, sign_char(s))}},
                                  chern_kernel_element(spec, b, s));
            };
        });

        CLI::App* tangent = chern->add_subcommand("tangent", "Chern class of a stable lift of the tangent bundle of CP^n");
        tangent->add_option("--n", copt.n)->required();
        tangent->add_option("--d", copt.d, "d_1,..,d_r")->delimiter(',');
        tangent->add_option("--dtop", copt.dtop, "d_{r+1}")->capture_default_str();
        tangent->add_option("--sign", copt.sign, "+, - or natural")->capture_default_str();
        add_output_options(tangent, copt.o, true);
        tangent->callback([&] {
            action = [&] {
                const RingSpec spec(1, copt.n);
                if (tangent_twist_u(spec.n) == 0 && copt.dtop != 0)
                    throw UsageError("--dtop has no meaning for even n");
                const Sign s = parse_sign(copt.sign).value_or(natural_tangent_sign(spec.n));
                const auto d = to_bigints(copt.d);
                const TruncPoly c = chern_tangent_stable(spec, d, copt.dtop, s);
                if (copt.o.format == "text") {
                    out << format_poly(c) << "\n";
                    return 0;
                }
                ReportRecord rec;
                rec.query = {{"command", "chern"}, {"kind", "tangent"}, {"n", copt.n},
                             {"d", copt.d},        {"dtop", copt.dtop},  {"sign", std::string(1, sign_char(s))}};
                rec.payload = {{"class", poly_json(c)}};
                emitter.emit(copt.o, rec, [&] { return copt.o.format == "csv" ? poly_csv(c) : poly_md(c); });
                return 0;
            };
        });
    }

    // table --------------------------------------------------------------
    CLI::App* table = app.add_subcommand("table", "Verdict grid over S^{2m} x CP^n or D(2p, 2q+1)");
    struct {
        std::string kind = "cp";
        int max_m = 0, max_n = 0;
        Output o;
    } topt;
    table->add_option("--kind", topt.kind)->check(CLI::IsMember({"cp", "dold"}))->capture_default_str();
    table->add_option("--max-m", topt.max_m, "largest m (or p)")->required();
    table->add_option("--max-n", topt.max_n, "largest n (or q)")->required();
    add_output_options(table, topt.o);
    table->callback([&] {
        action = [&] {
            if (topt.max_m < 1 || topt.max_n < 1)
                throw UsageError("--max-m and --max-n must be >= 1");
            const bool dold = topt.kind == "dold";
            std::vector<TableCell> cells;
            for (int i = 1; i <= topt.max_m; ++i) {
                for (int j = dold ? 0 : 1; j <= topt.max_n; ++j)
                    cells.push_back({i, j, dold ? decide_dold(i, j) : decide_cp(i, j)});
            }
            ReportRecord rec;
            rec.query = {{"command", "table"}, {"kind", topt.kind}, {"max_m", topt.max_m}, {"max_n", topt.max_n}};
            rec.payload = table_payload(topt.kind, cells);
            emitter.emit(topt.o, rec, [&] {
                return topt.o.format == "csv" ? table_csv(topt.kind, cells) : table_md(topt.kind, cells);
            });
            return 0;
        };
    });

    std::vector<const char*> argv{"acs"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "acs: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "acs: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!action) {
        err << "acs: no command given\n";
        return kExitUsage;
    }
    try {
        return action();
    } catch (const UnsupportedError& e) {
        err << "acs: unsupported: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const DomainError& e) {
        err << "acs: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "acs: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace acs
