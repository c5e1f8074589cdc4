#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzv/errors.hpp"
#include "mzv/identities.hpp"
#include "mzv/numeric.hpp"
#include "mzv/renorm_gz.hpp"
#include "mzv/renorm_mp.hpp"
#include "mzv/words.hpp"

#ifndef MZV_DEFAULT_FIXTURE_DIR
#define MZV_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace mzv::cli {

using json = nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

namespace {

struct Config {
    std::optional<int> trunc;
    std::string format = "plain";
    std::string convention = "riemann";

    json to_json() const {
        return {{"trunc", trunc ? json(*trunc) : json(nullptr)},
                {"format", format},
                {"convention", convention},
                {"fixture_dir", fixture_dir()}};
    }
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string tok = text.substr(pos, end - pos);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw ParseError("expected an integer", pos);
        out.push_back(v);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

/// '(' marks (s|r) letters, ',' a composition; 0/1 text is binary when no letter product is needed.
Word parse_any_word(const std::string& text, bool merging) {
    if (text.find('(') != std::string::npos) return parse_zr_word(text);
    if (text.find(',') != std::string::npos) return parse_z_word(text);
    const bool binary = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return c == '0' || c == '1' || std::isspace(static_cast<unsigned char>(c));
    });
    if (binary && !merging) return parse_x_word(text);
    return parse_z_word(text);
}

Table to_strings(const std::vector<std::vector<Rational>>& t) {
    Table out;
    for (const auto& row : t) {
        out.emplace_back();
        for (const auto& v : row) out.back().push_back(v.str());
    }
    return out;
}

void print_table(std::ostream& out, const Table& t, const std::string& format) {
    const std::size_t n = t.empty() ? 0 : t[0].size();
    if (format == "csv") {
        for (const auto& row : t) {
            for (std::size_t a = 0; a < row.size(); ++a) out << (a ? "," : "") << row[a];
            out << '\n';
        }
    } else if (format == "markdown") {
        out << "| b\\a |";
        for (std::size_t a = 0; a < n; ++a) out << ' ' << a << " |";
        out << "\n|---|";
        for (std::size_t a = 0; a < n; ++a) out << "---|";
        out << '\n';
        for (std::size_t b = 0; b < t.size(); ++b) {
            out << "| " << b << " |";
            for (const auto& v : t[b]) out << ' ' << v << " |";
            out << '\n';
        }
    } else {
        std::size_t w = 4;
        for (const auto& row : t)
            for (const auto& v : row) w = std::max(w, v.size());
        w += 2;
        out << std::left << std::setw(5) << "b\\a";
        for (std::size_t a = 0; a < n; ++a) out << std::right << std::setw(static_cast<int>(w)) << a;
        out << '\n';
        for (std::size_t b = 0; b < t.size(); ++b) {
            out << std::left << std::setw(5) << b;
            for (const auto& v : t[b]) out << std::right << std::setw(static_cast<int>(w)) << v;
            out << '\n';
        }
    }
}

std::string resolve_fixture(const std::string& given, const std::string& which) {
    namespace fs = std::filesystem;
    if (given == "default") return (fs::path(fixture_dir()) / (which + ".json")).string();
    if (fs::exists(given)) return given;
    const fs::path alt = fs::path(fixture_dir()) / fs::path(given).filename();
    return fs::exists(alt) ? alt.string() : given;
}

struct Mismatch {
    int a, b;
    std::string expected, actual;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Table load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read golden fixture " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("malformed golden fixture " + path + ": " + e.what());
    }
    if (!j.contains("table") || !j["table"].is_array()) throw IoError("golden fixture has no table: " + path);
    Table t;
    for (const auto& row : j["table"]) {
        t.emplace_back();
        for (const auto& v : row) t.back().push_back(v.get<std::string>());
    }
    return t;
}

std::vector<Mismatch> diff_tables(const Table& golden, const Table& actual) {
    std::vector<Mismatch> out;
    const std::size_t rows = std::max(golden.size(), actual.size());
    for (std::size_t b = 0; b < rows; ++b) {
        const std::size_t cols = std::max(b < golden.size() ? golden[b].size() : 0, b < actual.size() ? actual[b].size() : 0);
        for (std::size_t a = 0; a < cols; ++a) {
            const std::string g = b < golden.size() && a < golden[b].size() ? golden[b][a] : "<missing>";
            const std::string v = b < actual.size() && a < actual[b].size() ? actual[b][a] : "<missing>";
            if (g != v) out.push_back({static_cast<int>(a), static_cast<int>(b), g, v});
        }
    }
    return out;
}

json case_json(const SuiteCase& c) {
    return {{"instance", c.instance}, {"pass", c.pass},       {"lhs", c.lhs},      {"rhs", c.rhs},
            {"discrepancy", c.discrepancy}, {"bound", c.bound}, {"reason", c.reason}};
}

json suite_json(const SuiteResult& r) {
    json cases = json::array();
    for (const auto& c : r.cases) cases.push_back(case_json(c));
    return {{"suite", r.info.name},
            {"statement", r.info.statement},
            {"range", r.info.range},
            {"kind", r.info.kind == SuiteKind::Symbolic ? "symbolic" : "numeric"},
            {"implemented", r.info.implemented},
            {"tolerance", r.info.tolerance},
            {"worst_bound", r.worst_bound},
            {"passed", r.passed()},
            {"summary", r.summary()},
            {"cases", cases}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

} // namespace

std::string fixture_dir() {
    if (const char* env = std::getenv("MZV_FIXTURE_DIR"); env && *env) return env;
    return MZV_DEFAULT_FIXTURE_DIR;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric computations with multiple zeta values"};
    app.name("mzv");
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    int trunc_value = 0;
    auto* trunc_opt = app.add_option("--trunc", trunc_value, "Laurent truncation order for heat-kernel values");
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown", "plain"}));
    app.add_option("--convention", cfg.convention, "Hurwitz convention at a = 0")
        ->check(CLI::IsMember({"riemann", "zero-inclusive"}));

    // product
    auto* product = app.add_subcommand("product", "Shuffle, stuffle or mixable shuffle of two words");
    std::string ptype = "stuffle", pweight = "1", w1, w2;
    product->add_option("--type", ptype)->check(CLI::IsMember({"shuffle", "stuffle", "mixable"}));
    product->add_option("--weight", pweight, "lambda for the mixable shuffle");
    product->add_option("w1", w1)->required();
    product->add_option("w2", w2)->required();

    // renorm
    auto* renorm = app.add_subcommand("renorm", "Renormalized value at non-positive arguments");
    std::string rscheme, rargs, rmethod = "birkhoff", rv = "0";
    bool rdelta = false, rexact = false;
    renorm->add_option("scheme", rscheme)->required()->check(CLI::IsMember({"gz", "mp"}));
    renorm->add_option("--args", rargs, "comma separated arguments, e.g. -1,-3")->required();
    renorm->add_flag("--delta", rdelta, "directions |s| + delta with delta -> 0 (default)");
    renorm->add_flag("--exact", rexact, "directions r = -s");
    renorm->add_option("--method", rmethod)->check(CLI::IsMember({"ev12", "ev21", "sym", "birkhoff"}));
    renorm->add_option("--v", rv, "Hurwitz shift");

    // table
    auto* table = app.add_subcommand("table", "Table of renormalized double values");
    std::string twhich, tmethod = "birkhoff", golden;
    int tmax = 6;
    bool texact = false;
    table->add_option("which", twhich)->required()->check(CLI::IsMember({"gz", "mp"}));
    table->add_option("--max", tmax)->check(CLI::Range(0, 12));
    table->add_option("--method", tmethod)->check(CLI::IsMember({"ev12", "ev21", "sym", "birkhoff"}));
    table->add_flag("--exact", texact, "heat-kernel directions r = -s");
    table->add_option("--diff-golden", golden, "fixture path, or 'default'");

    // compare
    auto* compare = app.add_subcommand("compare", "Cell-by-cell comparison of the two schemes");
    std::string cwhat;
    int cmax = 6;
    compare->add_option("what", cwhat)->required()->check(CLI::IsMember({"gz-mp"}));
    compare->add_option("--max", cmax)->check(CLI::Range(0, 12));

    // eval
    auto* evalc = app.add_subcommand("eval", "Numeric multiple zeta values");
    std::string ekind, eargs, eq = "1/2";
    double etarget = 1e-12;
    long enmax = 10'000'000;
    evalc->add_option("kind", ekind)->required()->check(CLI::IsMember({"mzv", "star", "qmzv", "qstar"}));
    evalc->add_option("--args", eargs)->required();
    evalc->add_option("--q", eq);
    evalc->add_option("--target", etarget)->check(CLI::PositiveNumber);
    evalc->add_option("--n-max", enmax)->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity suites");
    std::string vname = "all";
    int vmax = 0;
    bool vjson = false;
    verify->add_option("suite", vname);
    verify->add_option("--max", vmax, "lower the main size parameter of every suite")->check(CLI::PositiveNumber);
    verify->add_flag("--json", vjson);

    std::vector<std::string> argv_store{"mzv"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (*trunc_opt) cfg.trunc = trunc_value;
    const bool as_json = cfg.format == "json" || vjson;

    try {
        const ZetaConvention conv = parse_convention(cfg.convention);

        if (*product) {
            const Rational lambda = ptype == "shuffle" ? Rational(0) : ptype == "stuffle" ? Rational(1) : Rational::parse(pweight);
            const Word a = parse_any_word(w1, !lambda.is_zero()), b = parse_any_word(w2, !lambda.is_zero());
            const WordSumQ p = mixable_shuffle(WordSumQ(a), WordSumQ(b), lambda);
            if (as_json) {
                json terms = json::array();
                for (const auto& [w, c] : p.terms()) terms.push_back({{"word", render_word(w)}, {"coeff", c.str()}});
                emit(out, {{"command", "product"}, {"config", cfg.to_json()}, {"type", ptype}, {"weight", lambda.str()},
                           {"w1", w1}, {"w2", w2}, {"result", render(p)}, {"terms", terms}});
            } else {
                out << render(p) << '\n';
            }
            return kOk;
        }

        if (*renorm) {
            const std::vector<int> s = parse_int_list(rargs);
            Rational value;
            if (rscheme == "gz") {
                if (rdelta && rexact) throw DomainError("--delta and --exact are exclusive");
                GzOptions o;
                o.mode = rexact ? DirectionMode::Exact : DirectionMode::DeltaSymbolic;
                o.trunc = cfg.trunc;
                value = gz_renorm(s, o);
            } else {
                const Rational v = Rational::parse(rv);
                if (s.size() == 1) {
                    if (s[0] > 0) throw DomainError("expected a non-positive argument");
                    value = zeta1_neg(-s[0], v, conv);
                } else if (s.size() == 2) {
                    value = mp_value(-s[0], -s[1], parse_mp_method(rmethod), v, conv);
                } else {
                    throw DomainError("the meromorphic scheme is implemented for depth 1 and 2");
                }
            }
            if (as_json) {
                emit(out, {{"command", "renorm"}, {"config", cfg.to_json()}, {"scheme", rscheme}, {"args", s},
                           {"method", rscheme == "mp" ? json(rmethod) : json(rexact ? "exact" : "delta")},
                           {"value", value.str()}});
            } else {
                out << value.str() << '\n';
            }
            return kOk;
        }

        if (*table) {
            std::vector<std::vector<Rational>> t;
            if (twhich == "gz") {
                GzOptions o;
                o.mode = texact ? DirectionMode::Exact : DirectionMode::DeltaSymbolic;
                o.trunc = cfg.trunc;
                t = gz_table(tmax, o);
            } else {
                t = mp_table(tmax, parse_mp_method(tmethod), Rational(0), conv);
            }
            const Table strings = to_strings(t);
            std::vector<Mismatch> mism;
            std::string golden_path;
            if (!golden.empty()) {
                golden_path = resolve_fixture(golden, twhich);
                mism = diff_tables(load_golden(golden_path), strings);
            }
            if (as_json) {
                json j{{"command", "table"}, {"config", cfg.to_json()}, {"scheme", twhich},
                       {"method", twhich == "mp" ? json(tmethod) : json(texact ? "exact" : "delta")},
                       {"rows", "b"}, {"columns", "a"}, {"max", tmax}, {"table", strings}};
                if (!golden.empty()) {
                    json m = json::array();
                    for (const auto& x : mism)
                        m.push_back({{"a", x.a}, {"b", x.b}, {"expected", x.expected}, {"actual", x.actual}});
                    j["diff"] = {{"golden", golden_path}, {"match", mism.empty()}, {"mismatches", m}};
                }
                emit(out, j);
            } else {
                print_table(out, strings, cfg.format);
                if (!golden.empty()) {
                    if (mism.empty()) {
                        err << "golden match: all " << (tmax + 1) * (tmax + 1) << " cells agree with " << golden_path << '\n';
                    } else {
                        err << "golden mismatch: " << mism.size() << " cells differ from " << golden_path << '\n';
                        for (const auto& x : mism)
                            err << "  (a=" << x.a << ",b=" << x.b << ") expected " << x.expected << ", got " << x.actual
                                << '\n';
                    }
                }
            }
            return mism.empty() ? kOk : kFailure;
        }

        if (*compare) {
            GzOptions o;
            o.trunc = cfg.trunc;
            const SchemeComparison c =
                compare_tables(gz_table(cmax, o), mp_table(cmax, MpMethod::Birkhoff, Rational(0), conv));
            auto cells = [](const std::vector<CellComparison>& v) {
                json a = json::array();
                for (const auto& x : v) a.push_back({{"a", x.a}, {"b", x.b}, {"gz", x.gz.str()}, {"mp", x.mp.str()}});
                return a;
            };
            if (as_json) {
                emit(out, {{"command", "compare"}, {"config", cfg.to_json()}, {"max", cmax},
                           {"agree", cells(c.agree)}, {"disagree", cells(c.disagree)},
                           {"claimed_but_different", cells(c.missing_claimed)}});
            } else {
                out << "agree: " << c.agree.size() << " cells\n";
                out << "disagree: " << c.disagree.size() << " cells\n";
                for (const auto& x : c.disagree)
                    out << "  (a=" << x.a << ",b=" << x.b << ") gz " << x.gz.str() << "  mp " << x.mp.str() << '\n';
                out << "expected agreement (a+b odd with b != 0, or a = b) but different: " << c.missing_claimed.size()
                    << '\n';
                for (const auto& x : c.missing_claimed)
                    out << "  (a=" << x.a << ",b=" << x.b << ") gz " << x.gz.str() << "  mp " << x.mp.str() << '\n';
            }
            return c.missing_claimed.empty() ? kOk : kFailure;
        }

        if (*evalc) {
            const std::vector<int> s = parse_int_list(eargs);
            const NumericOptions o{etarget, enmax};
            const bool qkind = ekind == "qmzv" || ekind == "qstar";
            const Rational q = qkind ? Rational::parse(eq) : Rational(0);
            const NumericValue v = ekind == "mzv"    ? mzv_eval(s, o)
                                   : ekind == "star" ? mzv_star_eval(s, o)
                                   : ekind == "qmzv" ? qmzv_eval(s, q, o)
                                                     : qmzv_star_eval(s, q, o);
            if (as_json) {
                emit(out, {{"command", "eval"}, {"config", cfg.to_json()}, {"kind", ekind}, {"args", s},
                           {"q", qkind ? json(q.str()) : json(nullptr)}, {"target", etarget},
                           {"value", v.value_str(30)}, {"error_bound", v.bound_str()}, {"terms_used", v.terms_used},
                           {"tail_model", tail_model_description()}});
            } else {
                out << "value  " << v.value_str(25) << '\n';
                out << "bound  " << v.bound_str() << '\n';
                out << "terms  " << v.terms_used << '\n';
                out << "model  " << tail_model_description() << '\n';
            }
            return kOk;
        }

        if (*verify) {
            SuiteParams params;
            if (vmax > 0) params.max_weight = vmax;
            std::vector<SuiteResult> results;
            if (vname == "all") results = run_all(params);
            else results.push_back(run_suite(vname, params));
            bool all_ok = true;
            std::size_t ok = 0, skipped = 0;
            for (const auto& r : results) {
                all_ok = all_ok && r.passed();
                if (!r.info.implemented) ++skipped;
                else if (r.passed()) ++ok;
            }
            if (as_json) {
                json suites = json::array();
                for (const auto& r : results) suites.push_back(suite_json(r));
                json cfgj = cfg.to_json();
                cfgj["max"] = vmax > 0 ? json(vmax) : json(nullptr);
                emit(out, {{"command", "verify"}, {"config", cfgj}, {"suite", vname}, {"passed", all_ok},
                           {"suites", suites}});
            } else {
                for (const auto& r : results) {
                    out << (r.info.implemented ? (r.passed() ? "PASS " : "FAIL ") : "SKIP ") << r.summary() << '\n';
                    for (const auto& c : r.cases) {
                        if (c.pass) continue;
                        out << "    " << c.instance << ": lhs " << c.lhs << ", rhs " << c.rhs << ", discrepancy "
                            << c.discrepancy << " (" << c.reason << ")\n";
                    }
                }
                out << "summary: " << ok << "/" << results.size() - skipped << " suites passed";
                if (skipped) out << ", " << skipped << " not implemented";
                out << '\n';
            }
            return all_ok ? kOk : kFailure;
        }
    } catch (const PrecisionUnreachable& e) {
        err << "precision error: " << e.what() << '\n';
        return kPrecision;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kPrecision;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace mzv::cli
