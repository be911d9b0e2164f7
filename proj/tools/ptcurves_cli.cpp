// Command-line front end: curve analysis, box and pattern counts, moment and
// distribution experiments, and the lemma verifiers.
//
// Exit codes: 0 success, 1 an --assert check failed, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptcurves/report_io.hpp"
#include "ptcurves/random_inputs.hpp"

namespace {

using namespace ptcurves;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    u64 p = 0;
    std::string curve;
    u64 seed = 1;
    int threads = 0;
    std::string format = "csv";
    std::string out;
    bool assert_checks = false;
};

/// Collects CSV lines or JSON values and writes them once at the end.
class Output {
public:
    explicit Output(const GlobalOptions& g) : g_(g) {}

    bool csv() const { return g_.format == "csv"; }
    void line(const std::string& s) { lines_.push_back(s); }
    void value(json v) { json_ = std::move(v); }

    void flush() const {
        std::ostringstream os;
        if (csv()) {
            for (const auto& l : lines_) os << l << '\n';
        } else {
            os << json_.dump(2) << '\n';
        }
        if (g_.out.empty()) {
            std::cout << os.str();
            std::cout.flush();
        } else {
            std::ofstream f(g_.out, std::ios::binary);
            if (!f) throw UsageError("cannot open output file '" + g_.out + "'");
            f << os.str();
        }
    }

private:
    const GlobalOptions& g_;
    std::vector<std::string> lines_;
    json json_;
};

PrimeModulus modulus(const GlobalOptions& g) {
    if (g.p == 0) throw UsageError("--p is required");
    return PrimeModulus(g.p);
}

PlaneCurve curve(const GlobalOptions& g, const PrimeModulus& m) {
    if (g.curve.empty()) throw UsageError("--curve is required");
    return PlaneCurve::parse(m, g.curve);
}

CyclicInterval interval_or_full(u64 p, const std::string& text) {
    return text.empty() ? CyclicInterval::full(p) : CyclicInterval::parse(p, text);
}

std::vector<u64> parse_int_list(const std::string& text, const char* what) {
    std::vector<u64> out;
    for (const auto& part : io::split(text, ';')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError(std::string(what) + ": expected ';'-separated non-negative integers, got '" + text + "'");
        }
        out.push_back(std::stoull(part));
    }
    return out;
}

int verdict(bool ok, const std::string& what) {
    if (ok) return kExitOk;
    std::cerr << "assertion failed: " << what << '\n';
    return kExitAssert;
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string j;
};

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    const auto j = interval_or_full(m.value(), o.j);
    Output out(g);

    const u64 n = enumerate_points(c, g.threads);
    const auto ram = find_completely_ramified(c, g.threads);
    const auto cond = check_condition_one(c, j, g.threads);
    const bool weil = within_weil_range(c, n);
    if (ram.ramified_x.empty()) {
        std::cerr << "note: no completely ramified x in F_p; the search covers F_p-rational x only, so this does "
                     "not rule out one over an extension\n";
    }
    if (!cond.holds) {
        std::cerr << "note: condition (cond1) fails: x = " << *cond.x << " has y = " << cond.y1 << " and y = "
                  << cond.y2 << " in J\n";
    }

    if (out.csv()) {
        out.line("p,curve,d,y_degree,N,weil_range,ramified_count,ramified_x,ramification_search,J_start,J_len,cond1,"
                 "witness_x,witness_y");
        std::ostringstream row;
        row << m.value() << ',' << c.poly().to_text() << ',' << c.degree() << ',' << c.y_degree() << ',' << n << ','
            << (weil ? "true" : "false") << ',' << ram.ramified_x.size() << ',' << io::join_ints(ram.ramified_x)
            << ",F_p only," << j.start() << ',' << j.length() << ',' << (cond.holds ? "true" : "false") << ',';
        if (!cond.holds) row << *cond.x << ',' << cond.y1 << ';' << cond.y2;
        else row << ',';
        out.line(row.str());
    } else {
        json v = {{"p", m.value()},
                  {"curve", c.poly().to_text()},
                  {"d", c.degree()},
                  {"y_degree", c.y_degree()},
                  {"N", n},
                  {"weil_range", weil},
                  {"ramified_x", ram.ramified_x},
                  {"ramification_search", "F_p only"},
                  {"J", {{"start", j.start()}, {"length", j.length()}}},
                  {"cond1", cond.holds}};
        if (!cond.holds) v["witness"] = {{"x", *cond.x}, {"y", {cond.y1, cond.y2}}};
        out.value(std::move(v));
    }
    out.flush();
    if (!g.assert_checks) return kExitOk;
    return verdict(cond.holds && !ram.ramified_x.empty(),
                   "hypotheses: completely ramified x over F_p and (cond1) on J");
}

struct CountOptions {
    std::string i, j;
};

int cmd_count(const GlobalOptions& g, const CountOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    std::vector<CyclicInterval> box{interval_or_full(m.value(), o.i), interval_or_full(m.value(), o.j)};
    const auto rec = weil_defect(CurveIndex(c, g.threads), box);
    Output out(g);
    if (out.csv()) {
        out.line(io::weil_header());
        out.line(io::weil_row(m.value(), c.poly().to_text(), box, rec));
    } else {
        out.value(io::weil_json(m.value(), c.poly().to_text(), box, rec));
    }
    out.flush();
    if (!g.assert_checks) return kExitOk;
    return verdict(rec.ratio <= 1, "defect/bound <= 1");
}

struct PatternOptions {
    std::string a, b, i, j;
    u64 random = 0;
    std::size_t s = 1;
};

int cmd_patterns(const GlobalOptions& g, const PatternOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    const u64 p = m.value();
    const auto j = interval_or_full(p, o.j);

    std::vector<std::pair<PatternSpec, CyclicInterval>> jobs;
    if (o.random > 0) {
        if (!o.a.empty() || !o.b.empty()) throw UsageError("--random excludes --a/--b");
        SeededRng rng(g.seed);
        for (u64 t = 0; t < o.random; ++t) {
            auto spec = random_pattern_spec(rng, m, o.s);
            auto i = o.i.empty() ? random_interval(rng, p, 1, p) : CyclicInterval::parse(p, o.i);
            jobs.emplace_back(std::move(spec), i);
        }
    } else {
        if (o.a.empty() || o.b.empty()) throw UsageError("give --a and --b, or --random N");
        jobs.emplace_back(PatternSpec(m, parse_int_list(o.a, "--a"), parse_int_list(o.b, "--b")),
                          interval_or_full(p, o.i));
    }

    const CurveIndex idx(c, g.threads);
    Output out(g);
    json rows = json::array();
    if (out.csv()) out.line(io::pattern_header());
    std::vector<double> ratios;
    bool identity_ok = true;
    for (const auto& [spec, i] : jobs) {
        const auto r = main_term_defect(idx, spec, i, j, g.threads);
        ratios.push_back(r.ratio);
        if (g.assert_checks) {
            const u64 shifted = count_shifted_points(build_shifted_curve(c, spec), i, j, g.threads);
            if (shifted != r.count) {
                identity_ok = false;
                std::cerr << "identity mismatch: patterns " << r.count << " vs shifted-curve points " << shifted
                          << '\n';
            }
        }
        if (out.csv()) out.line(io::pattern_row(c, spec, i, j, r));
        else rows.push_back(io::pattern_json(c, spec, i, j, r));
    }
    if (!out.csv()) out.value(std::move(rows));
    out.flush();
    if (!g.assert_checks) return kExitOk;
    if (!identity_ok) return verdict(false, "pattern count equals shifted-curve point count");
    return verdict(percentile(ratios, 0.95) <= 1, "95th percentile of defect/bound <= 1");
}

struct MomentOptions {
    std::vector<u64> h;
    std::vector<unsigned> k;
    std::string j;
    bool allow_cond1_violation = false;
};

int cmd_moments(const GlobalOptions& g, const MomentOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    const auto j = interval_or_full(m.value(), o.j);
    const CurveIndex idx(c, g.threads);
    Output out(g);
    json rows = json::array();
    if (out.csv()) out.line(io::moment_header());
    bool ok = true;
    for (u64 h : o.h) {
        for (unsigned k : o.k) {
            MomentSpec spec{k, h, j};
            const auto rep = moment_report(idx, spec, !o.allow_cond1_violation, g.threads);
            ok = ok && rep.ratio <= 1;
            if (out.csv()) out.line(io::moment_row(c, spec, rep));
            else rows.push_back(io::moment_json(c, spec, rep));
        }
    }
    if (!out.csv()) out.value(std::move(rows));
    out.flush();
    if (!g.assert_checks) return kExitOk;
    return verdict(ok, "|M_k - p mu_k| / bound <= 1 for every row");
}

struct GaussOptions {
    u64 h = 0;
    std::string j;
    double ks_max = 0.05;
    double ks_normal_max = 0.06;
    bool histogram = false;
};

int cmd_gauss(const GlobalOptions& g, const GaussOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    const auto j = interval_or_full(m.value(), o.j);
    const CurveIndex idx(c, g.threads);
    const auto hist = box_count_histogram(idx, o.h, j, g.threads);
    const auto rep = distribution_report(hist);
    Output out(g);
    if (out.csv()) {
        if (o.histogram) {
            out.line(io::histogram_header());
            for (auto& l : io::histogram_rows(c, j, hist)) out.line(l);
        } else {
            out.line(io::summary_header());
            out.line(io::summary_row(c, hist, rep));
        }
    } else {
        out.value(io::distribution_json(c, j, hist, rep, o.histogram));
    }
    out.flush();
    if (!g.assert_checks) return kExitOk;
    const bool ok = rep.ks_binomial <= o.ks_max && rep.ks_normal && *rep.ks_normal <= o.ks_normal_max;
    return verdict(ok, "ks_binomial <= " + to_decimal17(o.ks_max) + " and ks_normal <= " + to_decimal17(o.ks_normal_max));
}

struct WeilOptions {
    u64 samples = 100;
    std::size_t s = 0;
};

int cmd_verify_weil(const GlobalOptions& g, const WeilOptions& o) {
    const auto m = modulus(g);
    const auto c = curve(g, m);
    const u64 p = m.value();
    SeededRng rng(g.seed);
    Output out(g);
    json rows = json::array();
    if (out.csv()) out.line(io::weil_header());
    std::vector<double> ratios;
    std::optional<CurveIndex> idx;
    if (o.s == 0) idx.emplace(c, g.threads);
    for (u64 t = 0; t < o.samples; ++t) {
        DefectRecord rec;
        std::string object;
        std::vector<CyclicInterval> box;
        if (o.s == 0) {
            box = {random_interval(rng, p, 1, p), random_interval(rng, p, 1, p)};
            rec = weil_defect(*idx, box);
            object = "C";
        } else {
            const auto spec = random_pattern_spec(rng, m, o.s);
            for (std::size_t k = 0; k <= o.s; ++k) box.push_back(random_interval(rng, p, 1, p));
            rec = weil_defect(build_shifted_curve(c, spec), box, g.threads);
            object = "C_ab[a=" + io::join_ints(spec.a()) + "|b=" + io::join_ints(spec.b()) + "]";
        }
        ratios.push_back(rec.ratio);
        if (out.csv()) out.line(io::weil_row(p, object, box, rec));
        else rows.push_back(io::weil_json(p, object, box, rec));
    }
    if (!out.csv()) out.value(std::move(rows));
    out.flush();
    if (!ratios.empty()) {
        std::cerr << "max defect/bound " << to_decimal17(*std::max_element(ratios.begin(), ratios.end()))
                  << ", 95th percentile " << to_decimal17(percentile(ratios, 0.95)) << '\n';
    }
    if (!g.assert_checks) return kExitOk;
    return verdict(ratios.empty() || percentile(ratios, 0.95) <= 1, "95th percentile of defect/bound <= 1");
}

struct TranslateOptions {
    unsigned r = 2;
    unsigned m_max = 1;
    u64 trials = 1000;
};

int cmd_verify_translate(const GlobalOptions& g, const TranslateOptions& o) {
    if (g.p == 0) throw UsageError("--p is required");
    const auto found = translate_lemma_search(g.p, o.r, o.m_max, o.trials, g.seed, g.threads);
    Output out(g);
    if (out.csv()) {
        out.line(io::translate_header());
        for (const auto& ce : found) out.line(io::translate_row(ce));
    } else {
        json list = json::array();
        for (const auto& ce : found) list.push_back({{"trial", ce.trial}, {"x", ce.x}, {"M", ce.m}});
        out.value({{"p", g.p}, {"r", o.r}, {"m_max", o.m_max}, {"trials", o.trials}, {"seed", g.seed},
                   {"counterexamples", list}});
    }
    out.flush();
    std::cerr << found.size() << " counterexamples in " << o.trials << " trials\n";
    if (!g.assert_checks) return kExitOk;
    return verdict(found.empty(), "no counterexamples");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Points of plane curves over F_p in small boxes: counts, patterns, moments, Gaussian tests"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--p", g.p, "Odd prime modulus");
    app.add_option("--curve", g.curve, "Curve polynomial, e.g. \"x*y + 6\"");
    app.add_option("--seed", g.seed, "Seed for random inputs");
    app.add_option("--threads", g.threads, "Thread count (0 = OpenMP default)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "Write output to PATH instead of stdout");
    app.add_flag("--assert", g.assert_checks, "Exit 1 when the command's check fails");

    int rc = kExitOk;
    std::function<int()> run;

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze", "Point count, ramification and (cond1) report");
    analyze->add_option("--J", ao.j, "Interval start:length (default full)");
    analyze->callback([&] { run = [&] { return cmd_analyze(g, ao); }; });

    CountOptions co;
    auto* count = app.add_subcommand("count", "N_B(C) for B = I x J with its uniform main term");
    count->add_option("--I", co.i, "Interval start:length (default full)");
    count->add_option("--J", co.j, "Interval start:length (default full)");
    count->callback([&] { run = [&] { return cmd_count(g, co); }; });

    PatternOptions po;
    auto* patterns = app.add_subcommand("patterns", "(a,b)-pattern counts against |I|(|J|/p)^s");
    patterns->add_option("--a", po.a, "a_1;...;a_s");
    patterns->add_option("--b", po.b, "b_1;...;b_s");
    patterns->add_option("--I", po.i, "Interval start:length (default full, random with --random)");
    patterns->add_option("--J", po.j, "Interval start:length (default full)");
    patterns->add_option("--random", po.random, "Draw N random specs (and I) from --seed");
    patterns->add_option("--s", po.s, "Pattern length for --random")->check(CLI::PositiveNumber);
    patterns->callback([&] { run = [&] { return cmd_patterns(g, po); }; });

    MomentOptions mo;
    auto* moments = app.add_subcommand("moments", "M_k(H) against p mu_k(H, N/p)");
    moments->add_option("--H", mo.h, "Window length(s)")->required()->delimiter(',');
    moments->add_option("--k", mo.k, "Moment order(s)")->required()->delimiter(',');
    moments->add_option("--J", mo.j, "Interval start:length (default full)");
    moments->add_flag("--allow-cond1-violation", mo.allow_cond1_violation,
                      "Report even when (cond1) fails on J");
    moments->callback([&] { run = [&] { return cmd_moments(g, mo); }; });

    GaussOptions go;
    auto* gauss = app.add_subcommand("gauss", "Distribution of box counts against binomial and normal models");
    gauss->add_option("--H", go.h, "Window length")->required();
    gauss->add_option("--J", go.j, "Interval start:length (default full)");
    gauss->add_option("--ks-max", go.ks_max, "Threshold on the binomial KS distance for --assert");
    gauss->add_option("--ks-normal-max", go.ks_normal_max, "Threshold on the normal KS distance for --assert");
    gauss->add_flag("--histogram", go.histogram, "Emit the histogram (long format)");
    gauss->callback([&] { run = [&] { return cmd_gauss(g, go); }; });

    auto* verify = app.add_subcommand("verify", "Numerical checks of the supporting lemmas");
    verify->require_subcommand(1);
    verify->fallthrough();
    WeilOptions wo;
    auto* weil = verify->add_subcommand("weil", "Box-count defects on random boxes");
    weil->add_option("--samples", wo.samples, "Number of random boxes");
    weil->add_option("--s", wo.s, "Use the shifted curve C_{a,b} with random specs of this length (0 = plane)");
    weil->callback([&] { run = [&] { return cmd_verify_weil(g, wo); }; });
    TranslateOptions to;
    auto* translate = verify->add_subcommand("translate", "Randomized counterexample search for the translate lemma");
    translate->add_option("--r", to.r, "Number of translates");
    translate->add_option("--m-max", to.m_max, "Largest |M|");
    translate->add_option("--trials", to.trials, "Number of random trials");
    translate->callback([&] { run = [&] { return cmd_verify_translate(g, to); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        rc = run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return rc;
}
