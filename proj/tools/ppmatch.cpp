// ppmatch: paired-pattern matching on lattice and Delannoy paths.
//
// Subcommands: profile, enumerate, series, exactly, parity, expect, verify,
// bijection, export-bfile, asymptotics. Config precedence: flags, then PP_*
// environment variables, then defaults.

#include <CLI11.hpp>
#include <json.hpp>

#include "ppm/bijections.hpp"
#include "ppm/reports.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace ppm;
using nlohmann::json;

namespace {

struct GlobalOpts {
    int order = 16;
    int nmax = 6;
    std::string format = "text";
    bool force = false;
    int jobs = 1;
    std::string log_dir = "verify-logs";
};

OracleLimits limits_of(const GlobalOpts& g) {
    OracleLimits l;
    l.force = g.force;
    l.jobs = g.jobs;
    return l;
}

PathKind parse_kind(const std::string& s) {
    if (s == "lattice") return PathKind::lattice;
    if (s == "delannoy") return PathKind::delannoy;
    throw CLI::ValidationError("kind", "must be 'lattice' or 'delannoy'");
}

GFName parse_name(const std::string& s) {
    auto n = parse_gf_name(s);
    if (!n) throw CLI::ValidationError("name", "unknown generating function '" + s + "'");
    return *n;
}

Var parse_variable(const std::string& s) {
    auto v = parse_var(s);
    if (!v) throw CLI::ValidationError("var", "unknown variable '" + s + "'");
    return *v;
}

std::vector<std::pair<Var, std::string>> parse_assignments(const std::string& s) {
    std::vector<std::pair<Var, std::string>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("spec", "expected var=value, got '" + tok + "'");
        out.emplace_back(parse_variable(tok.substr(0, eq)), tok.substr(eq + 1));
    }
    return out;
}

BigRational rational_of(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

void print_profile(const PathReport& r, const GlobalOpts& g, bool grid, const PathWord& path) {
    if (g.format == "json") {
        std::cout << path_report_json(r) << "\n";
        return;
    }
    std::cout << "word = " << (r.word.empty() ? "(empty)" : r.word) << "  n = " << r.semisize
              << "  kind = " << (r.kind == PathKind::delannoy ? "delannoy" : "lattice") << "\n";
    for (int i = 1; i <= 6; ++i)
        std::cout << "P" << i << " = " << r.profile.at(i) << (i < 6 ? "  " : "\n");
    std::cout << "east-below = " << r.east_below << "  north-above = " << r.north_above << "\n";
    std::cout << "bounce- = " << r.bounce_minus << "  bounce+ = " << r.bounce_plus
              << "  crossh = " << r.cross_h << "  crossv = " << r.cross_v << "\n";
    std::cout << "dyck = " << (r.dyck ? "yes" : "no");
    if (r.area) std::cout << "  area = " << *r.area;
    std::cout << "\n";
    if (grid) std::cout << ascii_grid(path);
}

void print_sequence(const SequenceRecord& rec, const GlobalOpts& g) {
    if (g.format == "json") {
        json j;
        j["name"] = rec.name;
        j["offset"] = rec.offset;
        j["provenance"] = rec.provenance;
        if (!rec.oeis.empty()) j["oeis"] = rec.oeis;
        j["terms"] = json::array();
        for (const BigInt& t : rec.terms) j["terms"].push_back(t.str());
        std::cout << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        std::cout << "n,value\n";
        for (size_t i = 0; i < rec.terms.size(); ++i)
            std::cout << rec.offset + static_cast<int>(i) << "," << rec.terms[i].str() << "\n";
    } else {
        std::cout << rec.name;
        if (!rec.oeis.empty()) std::cout << "  (" << rec.oeis << ")";
        std::cout << "  offset " << rec.offset << "\n";
        for (size_t i = 0; i < rec.terms.size(); ++i)
            std::cout << rec.offset + static_cast<int>(i) << " " << rec.terms[i].str() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"paired-pattern matching on lattice paths: exact series, oracles, bijections"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--order", g.order, "series truncation order")->envname("PP_ORDER");
    app.add_option("--nmax", g.nmax, "largest semisize for enumeration checks")->envname("PP_NMAX");
    app.add_option("--format", g.format, "output format: text, json or csv")
        ->envname("PP_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--force", g.force, "lift the oracle size caps")->envname("PP_FORCE");
    app.add_option("--jobs", g.jobs, "worker threads for enumeration")->envname("PP_JOBS");
    app.add_option("--log-dir", g.log_dir, "directory for verify run logs")->envname("PP_LOGDIR");

    // profile
    std::string word, kind_str = "auto";
    bool no_grid = false;
    CLI::App* profile = app.add_subcommand("profile", "match counts and statistics of one path");
    profile->add_option("word", word, "path word over E/N (or E/N/D)");
    profile->add_option("--kind", kind_str, "lattice, delannoy or auto");
    profile->add_flag("--no-grid", no_grid, "suppress the ASCII grid");

    // enumerate
    int enum_n = 3;
    std::string enum_kind = "lattice";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all paths of a semisize");
    enumerate->add_option("n", enum_n, "semisize")->required();
    enumerate->add_option("--kind", enum_kind, "lattice or delannoy");

    // series
    std::string series_name, series_spec, series_exactly;
    int series_coeff = -1;
    CLI::App* series = app.add_subcommand("series", "expand a generating function");
    series->add_option("name", series_name, "F1..F6, F16, F25, F34, F24, F2345, FS4, C, Cxt, D, Dlittle")
        ->required();
    series->add_option("--spec", series_spec, "specialize variables, e.g. x=1 or x2=1,x5=-1");
    series->add_option("--coeff", series_coeff, "print only the coefficient of t^n");
    series->add_option("--exactly", series_exactly, "slice one variable, e.g. x=2");

    // exactly
    std::string ex_name, ex_monomial;
    bool ex_marginal = false;
    CLI::App* exactly = app.add_subcommand("exactly", "paths with exactly k matches");
    exactly->add_option("name", ex_name)->required();
    exactly->add_option("monomial", ex_monomial, "var=k[,var=k...]")->required();
    exactly->add_flag("--marginal", ex_marginal,
                      "unlisted marked variables count freely (set to 1) instead of 0");

    // parity
    std::string par_name, par_vars;
    CLI::App* par = app.add_subcommand("parity", "even/odd match-count series");
    par->add_option("name", par_name)->required();
    par->add_option("--vars", par_vars, "variables to flip (default: all)");

    // expect
    std::string expect_name;
    CLI::App* expect = app.add_subcommand("expect", "expected match counts per semisize");
    expect->add_option("name", expect_name)->required();

    // verify
    std::string verify_name;
    CLI::App* ver = app.add_subcommand("verify", "compare the catalog against enumeration");
    ver->add_option("name", verify_name, "a generating function name, or 'all'")->required();

    // bijection
    std::string bij_which, bij_word;
    CLI::App* bij = app.add_subcommand("bijection", "apply a reflection bijection to a path");
    bij->add_option("map", bij_which, "cross-to-bounce or touch-to-cross")
        ->required()
        ->check(CLI::IsMember({"cross-to-bounce", "touch-to-cross"}));
    bij->add_option("word", bij_word, "lattice path word")->required();

    // export-bfile
    std::string bf_spec, bf_path;
    int bf_from = -1, bf_to = -1;
    CLI::App* bfile = app.add_subcommand("export-bfile", "write a sequence as an OEIS b-file");
    bfile->add_option("spec", bf_spec, "sequence spec, e.g. exactly:F1:x=1 or gf:F2:x=0")
        ->required();
    bfile->add_option("path", bf_path, "output file")->required();
    bfile->add_option("--from", bf_from, "first index");
    bfile->add_option("--to", bf_to, "last index");

    // asymptotics
    std::string asym_target;
    int asym_from = 2, asym_to = 16;
    CLI::App* asym = app.add_subcommand("asymptotics", "exact expectation vs printed asymptote");
    asym->add_option("target", asym_target, "E[P1] E[P2] E[P3] E[P16] E[P25] E[P2345]")->required();
    asym->add_option("--from", asym_from, "first n");
    asym->add_option("--to", asym_to, "last n");

    CLI11_PARSE(app, argc, argv);

    try {
        if (profile->parsed()) {
            PathKind kind = kind_str == "auto"
                                ? (word.find('D') != std::string::npos ? PathKind::delannoy
                                                                       : PathKind::lattice)
                                : parse_kind(kind_str);
            PathWord p = PathWord::parse(word, kind);
            print_profile(profile_path(p), g, !no_grid && g.format == "text", p);
        } else if (enumerate->parsed()) {
            PathKind kind = parse_kind(enum_kind);
            limits_of(g).check(enum_n, kind);
            if (g.format == "json") {
                json j = json::array();
                for_each_path(enum_n, kind, [&](const PathWord& p) { j.push_back(p.word()); });
                std::cout << j.dump() << "\n";
            } else {
                for_each_path(enum_n, kind,
                              [&](const PathWord& p) { std::cout << p.word() << "\n"; });
            }
        } else if (series->parsed()) {
            GFName name = parse_name(series_name);
            TruncatedSeries<MultiPoly> f = build(name, g.order);
            if (!series_exactly.empty()) {
                auto a = parse_assignments(series_exactly);
                for (auto& [v, val] : a) f = exactly_k(name, v, std::stoi(val), g.order);
            }
            for (auto& [v, val] : parse_assignments(series_spec))
                f = substitute_var(f, v, rational_of(val));
            if (series_coeff >= 0) {
                std::cout << f.coeff(series_coeff).str() << "\n";
            } else if (g.format == "json") {
                std::cout << series_json(f) << "\n";
            } else {
                std::cout << series_str(f) << "\n";
            }
        } else if (exactly->parsed()) {
            GFName name = parse_name(ex_name);
            Monomial m{};
            std::set<Var> listed;
            for (auto& [v, val] : parse_assignments(ex_monomial)) {
                m[static_cast<size_t>(v)] = static_cast<std::uint8_t>(std::stoi(val));
                listed.insert(v);
            }
            TruncatedSeries<MultiPoly> f = build(name, g.order);
            if (ex_marginal)
                for (Var v : gf_variables(name))
                    if (!listed.count(v)) f = substitute_var(f, v, 1);
            TruncatedSeries<MultiPoly> sliced(g.order);
            for (int i = 0; i < g.order; ++i) {
                MultiPoly c = f.coeff(i);
                for (Var v : listed) c = c.coefficient_of(v, m[static_cast<size_t>(v)]);
                sliced.coeff_mut(i) = c;
            }
            SequenceRecord rec;
            rec.name = "exactly:" + ex_name + ":" + ex_monomial + (ex_marginal ? " (marginal)" : "");
            rec.provenance = "catalog";
            int off = 0;
            while (off < g.order && sliced.coeff(off).is_zero()) ++off;
            rec.offset = off == g.order ? 0 : off;
            for (int i = rec.offset; i < g.order && off < g.order; ++i) {
                if (!sliced.coeff(i).is_constant())
                    throw std::domain_error("slice still contains variables; add them to the "
                                            "monomial or use --marginal");
                rec.terms.push_back(numerator(sliced.coeff(i).constant_term()));
            }
            print_sequence(rec, g);
        } else if (par->parsed()) {
            GFName name = parse_name(par_name);
            std::vector<Var> flip;
            if (!par_vars.empty()) {
                std::stringstream ss(par_vars);
                std::string tok;
                while (std::getline(ss, tok, ',')) flip.push_back(parse_variable(tok));
            }
            ParityPair p = parity(name, flip, g.order);
            if (g.format == "json") {
                json j;
                j["even"] = json::parse(series_json(p.even));
                j["odd"] = json::parse(series_json(p.odd));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "even: " << series_str(p.even) << "\n";
                std::cout << "odd:  " << series_str(p.odd) << "\n";
            }
        } else if (expect->parsed()) {
            GFName name = parse_name(expect_name);
            TruncatedSeries<BigRational> num = expectation_numerators(name, g.order);
            std::vector<BigRational> e = expectation(name, g.order);
            if (g.format == "json") {
                json j = json::array();
                for (int n = 0; n < g.order; ++n)
                    j.push_back({{"n", n},
                                 {"numerator", numerator(num.coeff(n)).str()},
                                 {"paths", path_count(name, n).str()},
                                 {"expectation", to_string(e[static_cast<size_t>(n)])}});
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "n  total  paths  expectation\n";
                for (int n = 0; n < g.order; ++n) {
                    double val = numerator(e[static_cast<size_t>(n)]).convert_to<double>() /
                                 denominator(e[static_cast<size_t>(n)]).convert_to<double>();
                    std::printf("%-2d %s %s %s (%.4f)\n", n, num.coeff(n) == 0 ? "0" : numerator(num.coeff(n)).str().c_str(),
                                path_count(name, n).str().c_str(),
                                to_string(e[static_cast<size_t>(n)]).c_str(), val);
                }
            }
        } else if (ver->parsed()) {
            OracleLimits limits = limits_of(g);
            if (verify_name == "all") {
                VerifyAllOutcome out = verify_all(g.nmax, limits);
                std::string logfile = write_run_log(out, g.log_dir);
                if (g.format == "json") {
                    std::cout << out.json << "\n";
                } else {
                    for (const CheckResult& c : out.checks)
                        std::printf("[%s] %s (%s)\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                                    c.detail.c_str());
                    std::printf("%s -- log written to %s\n", out.pass ? "pass" : "FAIL",
                                logfile.c_str());
                }
                return out.pass ? 0 : 1;
            }
            VerificationReport rep = verify(parse_name(verify_name), g.nmax, limits);
            if (g.format == "json") {
                std::cout << verification_report_json(rep) << "\n";
            } else {
                for (const VerificationRow& r : rep.rows) {
                    std::printf("n=%d %s", r.n, r.pass ? "pass" : "FAIL");
                    if (!r.pass)
                        std::printf("  expected %s, got %s (first diff %s)", r.expected.c_str(),
                                    r.actual.c_str(), r.first_diff_monomial.c_str());
                    std::printf("\n");
                }
            }
            return rep.all_pass() ? 0 : 1;
        } else if (bij->parsed()) {
            PathWord p = PathWord::parse(bij_word, PathKind::lattice);
            PathWord q = bij_which == "cross-to-bounce" ? cross_to_bounce(p) : touch_to_cross(p);
            if (g.format == "json") {
                json j;
                j["input"] = json::parse(path_report_json(profile_path(p)));
                j["output"] = json::parse(path_report_json(profile_path(q)));
                std::cout << j.dump() << "\n";
            } else {
                PathReport a = profile_path(p), b = profile_path(q);
                std::cout << "input:  " << p.word() << "  bounce=" << a.bounce_minus + a.bounce_plus
                          << " cross=" << a.cross_h + a.cross_v
                          << " north-touch=" << a.bounce_minus + a.cross_v << "\n";
                std::cout << "output: " << q.word() << "  bounce=" << b.bounce_minus + b.bounce_plus
                          << " cross=" << b.cross_h + b.cross_v
                          << " north-touch=" << b.bounce_minus + b.cross_v << "\n";
            }
        } else if (bfile->parsed()) {
            SequenceRecord rec = sequence_by_spec(bf_spec, g.order);
            std::optional<int> from, to;
            if (bf_from >= 0) from = bf_from;
            if (bf_to >= 0) to = bf_to;
            std::ofstream f(bf_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + bf_path);
            f << bfile_text(rec, from, to);
            std::cerr << "wrote " << bf_path << "\n";
        } else if (asym->parsed()) {
            AsymptoticsTable t = asymptotics(asym_target, asym_from, asym_to);
            if (g.format == "json") {
                json j;
                j["target"] = t.target;
                j["formula"] = t.formula;
                j["rows"] = json::array();
                for (const AsymptoticsRow& r : t.rows)
                    j["rows"].push_back({{"n", r.n},
                                         {"exact", to_string(r.exact)},
                                         {"exact_value", r.exact_value},
                                         {"asymptote", r.asymptote},
                                         {"relative_gap", r.relative_gap}});
                j["gap_monotone_decreasing"] = t.gap_monotone_decreasing();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << t.target << "  asymptote: " << t.formula << "\n";
                std::cout << "n   exact            value      asymptote  rel.gap\n";
                for (const AsymptoticsRow& r : t.rows)
                    std::printf("%-3d %-16s %-10.5f %-10.5f %.5f\n", r.n,
                                to_string(r.exact).c_str(), r.exact_value, r.asymptote,
                                r.relative_gap);
                std::cout << (t.gap_monotone_decreasing() ? "relative gap shrinks monotonically"
                                                          : "relative gap is NOT monotone")
                          << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
