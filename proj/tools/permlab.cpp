#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permlab/dittert.hpp"
#include "permlab/io.hpp"
#include "permlab/lihwang.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"
#include "permlab/searchlab.hpp"
#include "permlab/symf.hpp"
#include "permlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace permlab;

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitInputError = 2;

class StepTimer {
  public:
    void start(const std::string& name) {
        name_ = name;
        t0_ = std::chrono::steady_clock::now();
    }
    void stop() {
        timings_[name_] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }
    json to_json() const {
        json j = json::object();
        for (const auto& [k, v] : timings_) j[k] = v;
        return j;
    }

  private:
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
    std::map<std::string, double> timings_;
};

// Reports are byte-reproducible for fixed flags and seed; wall-clock
// timings only appear when asked for.
bool g_with_timings = false;

void emit_report(bool as_json, const std::string& command, const json& inputs, const json& results, bool suite_pass,
                 const StepTimer& timer, const std::string& text) {
    if (as_json) {
        json rep{{"command", command}, {"inputs", inputs}, {"results", results}, {"suite_pass", suite_pass}};
        if (g_with_timings) rep["timings"] = timer.to_json();
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// ---------------------------------------------------------------- permanent

int cmd_permanent(const std::string& file, bool exact, bool as_json) {
    StepTimer timer;
    timer.start("permanent");
    json results;
    std::ostringstream text;
    bool agree = true;

    if (exact) {
        const MatQ A = io::read_matrix_file_exact(file);
        const Rat naive = A.n() <= kMaxOrder ? per_naive(A) : Rat(0);
        const Rat ryser = per_ryser(A);
        std::vector<int> alpha(A.n() / 2 ? A.n() / 2 : 1);
        for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = static_cast<int>(i);
        const Rat laplace = laplace_expand(A, alpha);
        const Rat incl = per_incl_excl(A);
        agree = ryser == laplace && ryser == incl && (A.n() > kMaxOrder || ryser == naive);
        results = {{"ryser", rat_to_string(ryser)},
                   {"laplace", rat_to_string(laplace)},
                   {"inclusion_exclusion", rat_to_string(incl)},
                   {"value_decimal", to_double(ryser)},
                   {"agreement", agree}};
        if (A.n() <= kMaxOrder) results["naive"] = rat_to_string(naive);
        text << "per = " << rat_to_string(ryser) << " (" << to_double(ryser) << ")\n"
             << "algorithms agree: " << (agree ? "yes" : "NO") << "\n";
    } else {
        const MatD A = io::read_matrix_file(file);
        const double naive = A.n() <= kMaxOrder ? per_naive(A) : 0.0;
        const double ryser = per_ryser(A);
        std::vector<int> alpha(A.n() / 2 ? A.n() / 2 : 1);
        for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = static_cast<int>(i);
        const double laplace = laplace_expand(A, alpha);
        const double incl = A.n() <= kMaxOrder ? per_incl_excl(A) : ryser;
        const double scale = std::max({std::abs(ryser), std::abs(laplace), 1e-300});
        agree = std::abs(ryser - laplace) <= 1e-12 * scale && std::abs(ryser - incl) <= 1e-12 * scale &&
                (A.n() > kMaxOrder || std::abs(ryser - naive) <= 1e-12 * scale);
        results = {{"ryser", ryser}, {"laplace", laplace}, {"inclusion_exclusion", incl}, {"agreement", agree}};
        if (A.n() <= kMaxOrder) results["naive"] = naive;
        text << "per = " << io::format_full(ryser) << "\n"
             << "algorithms agree: " << (agree ? "yes" : "NO") << "\n";
    }
    timer.stop();
    emit_report(as_json, "permanent", {{"file", file}, {"exact", exact}}, results, agree, timer, text.str());
    return agree ? kExitOk : kExitInputError;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, long samples, std::uint64_t seed, const std::string& witness_out,
               bool as_json) {
    StepTimer timer;
    timer.start("verify");
    const auto results = verify::run_suite(suite, samples, seed);
    timer.stop();

    bool pass = true;
    json jres = json::array();
    std::ostringstream text;
    for (const auto& r : results) {
        pass = pass && r.pass();
        json notes = json::array();
        for (const auto& n : r.failure_notes) notes.push_back(n);
        jres.push_back({{"suite", r.suite},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"seconds", r.seconds},
                        {"notes", std::move(notes)}});
        text << (r.pass() ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.checks << " checks, " << r.failures
             << " failures";
        if (g_with_timings) text << " (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
        text << "\n";
        for (const auto& n : r.failure_notes) text << "       " << n << "\n";
        if (!r.pass() && r.witness && !witness_out.empty()) {
            std::ofstream f(witness_out);
            f << io::write_matrix_text(*r.witness);
            text << "       witness written to " << witness_out << "\n";
        }
    }
    emit_report(as_json, "verify", {{"suite", suite}, {"samples", samples}, {"seed", seed}}, jres, pass, timer,
                text.str());
    return pass ? kExitOk : kExitAssertFailed;
}

// ------------------------------------------------------------------- table1

struct TableRow {
    const char* interval;
    double lo, hi;
    double paper_alpha;
    double paper_min;
};

constexpr TableRow kTable1[] = {
    {"[0.5,1]", 0.5, 1.0, 0.5, 0.1250},   {"[0.4,1]", 0.4, 1.0, 0.4, -0.5472},
    {"[0.45,1]", 0.45, 1.0, 0.45, -0.2654}, {"[0.48,1]", 0.48, 1.0, 0.48, -0.0452},
    {"[0.485,1]", 0.485, 1.0, 0.45, -0.0044}, {"[0.486,1]", 0.486, 1.0, 0.486, 0.0039},
    {"[0,1]", 0.0, 1.0, 0.2545, -0.8675},
};

int cmd_table1(int restarts, std::uint64_t seed, long max_evals, const std::string& trace_path, bool as_json) {
    StepTimer timer;
    timer.start("table1");
    json rows = json::array();
    std::ostringstream text;
    text << std::left << std::setw(11) << "interval" << std::right << std::setw(12) << "paper_alpha" << std::setw(11)
         << "paper_min" << std::setw(13) << "found_alpha" << std::setw(12) << "found_min" << std::setw(15)
         << "true_gap_min" << "\n";
    bool exhausted = false;
    std::ofstream trace;
    if (!trace_path.empty()) {
        trace.open(trace_path);
        trace << "row,restart,eval,value\n";
    }
    for (const auto& row : kTable1) {
        search::SearchConfig cfg;
        cfg.restarts = restarts;
        cfg.max_evals = max_evals;
        cfg.seed = seed;
        cfg.lo = row.lo;
        cfg.hi = row.hi;
        cfg.record_trace = !trace_path.empty();
        cfg.domain = search::Domain::omega4_quartic_paper;
        const auto printed = search::minimize_quartic_paper(cfg);
        cfg.domain = search::Domain::omega4_gap_true;
        const auto truegap = search::minimize_gap_true(cfg);
        exhausted = exhausted || printed.budget_exhausted || truegap.budget_exhausted;
        if (trace.is_open()) {
            for (std::size_t r = 0; r < printed.traces.size(); ++r)
                for (const auto& [ev, val] : printed.traces[r])
                    trace << row.interval << "," << r << "," << ev << "," << io::format_full(val) << "\n";
        }
        rows.push_back({{"interval", row.interval},
                        {"paper_alpha", row.paper_alpha},
                        {"paper_min", row.paper_min},
                        {"found_alpha", printed.best_alpha},
                        {"found_min", printed.best_value},
                        {"true_gap_alpha", truegap.best_alpha},
                        {"true_gap_min", truegap.best_value},
                        {"printed_best", io::to_json(GapReport{4, printed.best_alpha, printed.best_value,
                                                               printed.best_matrix, GapMethod::quartic_paper})},
                        {"true_gap_best", io::to_json(GapReport{4, truegap.best_alpha, truegap.best_value / 32.0,
                                                                truegap.best_matrix, GapMethod::direct})},
                        {"budget_exhausted", printed.budget_exhausted || truegap.budget_exhausted}});
        text << std::left << std::setw(11) << row.interval << std::right << std::fixed << std::setprecision(4)
             << std::setw(12) << row.paper_alpha << std::setw(11) << row.paper_min << std::setw(13)
             << printed.best_alpha << std::setw(12) << printed.best_value << std::setw(15) << truegap.best_value
             << "\n";
    }
    if (exhausted) text << "warning: some searches hit the evaluation budget before converging\n";
    timer.stop();
    emit_report(as_json, "table1", {{"restarts", restarts}, {"seed", seed}, {"max_evals", max_evals}}, rows, true,
                timer, text.str());
    return kExitOk;
}

// ---------------------------------------------------------------- gap-curve

int cmd_gap_curve(const std::string& file, int points, const std::string& out, bool as_json) {
    StepTimer timer;
    timer.start("gap_curve");
    const MatD A = io::read_matrix_file(file);
    if (!is_doubly_stochastic(A, 1e-9)) throw DomainError("gap-curve: matrix is not doubly stochastic");
    const bool with_f = A.n() == 6;
    const PolyD F = with_f ? f6_poly(A) : PolyD();
    std::ostringstream csv;
    csv << (with_f ? "t,gap,F\n" : "t,gap\n");
    for (int g = 0; g < points; ++g) {
        const double t = points == 1 ? 0.0 : static_cast<double>(g) / (points - 1);
        csv << io::format_full(t) << "," << io::format_full(gap_direct(A, t));
        if (with_f) csv << "," << io::format_full(F.eval(t));
        csv << "\n";
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot open output file: " + out);
        f << csv.str();
    }
    timer.stop();
    std::ostringstream text;
    if (out.empty())
        text << csv.str();
    else
        text << "wrote " << points << " grid points to " << out << "\n";
    emit_report(as_json, "gap_curve", {{"file", file}, {"points", points}, {"out", out}},
                {{"points", points}, {"written", !out.empty()}}, true, timer, text.str());
    return kExitOk;
}

// ------------------------------------------------------------------ dittert

int cmd_dittert_check(const std::string& file, bool exact, double tol, bool as_json) {
    StepTimer timer;
    timer.start("dittert_check");
    json results;
    std::ostringstream text;
    if (exact) {
        const MatQ X = io::read_matrix_file_exact(file);
        const auto rep = maximizer_conditions(X, Rat(0));
        const bool fi = is_fully_indecomposable(X);
        results = {{"report", io::to_json(rep)}, {"fully_indecomposable", fi}, {"phi", rat_to_string(rep.phi)}};
        text << "phi = " << rat_to_string(rep.phi) << " (" << to_double(rep.phi) << ")\n"
             << "support consistent: " << (rep.support_consistent ? "yes" : "no") << "\n"
             << "fully indecomposable: " << (fi ? "yes" : "no") << "\n";
    } else {
        const MatD X = io::read_matrix_file(file);
        const auto rep = maximizer_conditions(X, tol);
        const bool fi = is_fully_indecomposable(X);
        results = {{"report", io::to_json(rep)}, {"fully_indecomposable", fi}, {"phi", rep.phi}};
        text << "phi = " << io::format_full(rep.phi) << "\n"
             << "support consistent: " << (rep.support_consistent ? "yes" : "no") << "\n"
             << "fully indecomposable: " << (fi ? "yes" : "no") << "\n";
    }
    timer.stop();
    emit_report(as_json, "dittert_check", {{"file", file}, {"exact", exact}}, results, true, timer, text.str());
    return kExitOk;
}

int cmd_dittert_search(int restarts, std::uint64_t seed, long max_evals, const std::string& trace_path, bool as_json) {
    StepTimer timer;
    timer.start("dittert_search");
    search::SearchConfig cfg;
    cfg.domain = search::Domain::k4_phi;
    cfg.restarts = restarts;
    cfg.seed = seed;
    cfg.max_evals = max_evals;
    cfg.record_trace = !trace_path.empty();
    const auto res = search::maximize_phi_k4(cfg);
    if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        trace << "restart,eval,value\n";
        for (std::size_t r = 0; r < res.traces.size(); ++r)
            for (const auto& [ev, val] : res.traces[r]) trace << r << "," << ev << "," << io::format_full(val) << "\n";
    }
    timer.stop();
    const double dist = search::max_norm_to_uniform(res.best_matrix);
    const double phi_j4 = 2.0 - 3.0 / 32.0;
    json results{{"best_value", res.best_value},
                 {"phi_j4", phi_j4},
                 {"max_norm_to_J4", dist},
                 {"evals_used", res.evals_used},
                 {"budget_exhausted", res.budget_exhausted},
                 {"best_matrix", io::to_json(res.best_matrix)}};
    std::ostringstream text;
    text << "max phi found = " << io::format_full(res.best_value) << " (phi(J_4) = " << io::format_full(phi_j4)
         << ")\n"
         << "max-norm distance to J_4 = " << io::format_full(dist) << "\n";
    if (res.budget_exhausted) text << "warning: no restart converged within the evaluation budget\n";
    emit_report(as_json, "dittert_search", {{"restarts", restarts}, {"seed", seed}}, results, true, timer, text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: permanent inequalities on doubly stochastic matrices at desk scale"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable run report");
    app.add_flag("--timings", g_with_timings, "include wall-clock step timings in the report");

    // permanent
    std::string perm_file;
    bool perm_exact = false;
    auto* sub_perm = app.add_subcommand("permanent", "evaluate a matrix permanent by all applicable algorithms");
    sub_perm->add_option("file", perm_file, "matrix text file")->required();
    sub_perm->add_flag("--exact", perm_exact, "exact rational arithmetic");

    // verify
    std::string suite = "all";
    long samples = 200;
    std::uint64_t seed = 0;
    std::string witness_out = "witness.txt";
    auto* sub_verify = app.add_subcommand("verify", "run a named property suite");
    sub_verify->add_option("--suite", suite, "symf4|lihwang4|lihwang6|dittert|all");
    sub_verify->add_option("--samples", samples, "random samples per property");
    sub_verify->add_option("--seed", seed, "rng seed");
    sub_verify->add_option("--witness-out", witness_out, "file for a failing witness matrix");

    // table1
    int restarts = 50;
    long max_evals = 20000;
    std::string trace_path;
    auto* sub_table = app.add_subcommand("table1", "minimize the printed quartic and the true gap on seven intervals");
    sub_table->add_option("--restarts", restarts, "search restarts per row");
    sub_table->add_option("--seed", seed, "rng seed");
    sub_table->add_option("--max-evals", max_evals, "evaluation budget per restart");
    sub_table->add_option("--trace", trace_path, "write per-iteration CSV here");

    // gap-curve
    std::string curve_file, curve_out;
    int points = 101;
    auto* sub_curve = app.add_subcommand("gap-curve", "tabulate the convexity gap over a parameter grid");
    sub_curve->add_option("file", curve_file, "matrix text file")->required();
    sub_curve->add_option("--points", points, "grid size");
    sub_curve->add_option("--out", curve_out, "CSV output path");

    // dittert
    auto* sub_dit = app.add_subcommand("dittert", "phi diagnostics and K_4 search");
    std::string dit_file;
    bool dit_exact = false;
    double dit_tol = 1e-9;
    auto* sub_check = sub_dit->add_subcommand("check", "phi report for one matrix");
    sub_check->add_option("file", dit_file, "matrix text file")->required();
    sub_check->add_flag("--exact", dit_exact, "exact rational arithmetic");
    sub_check->add_option("--tol", dit_tol, "agreement tolerance");
    auto* sub_search = sub_dit->add_subcommand("search", "maximize phi over K_4");
    sub_search->add_option("--restarts", restarts, "search restarts");
    sub_search->add_option("--seed", seed, "rng seed");
    sub_search->add_option("--max-evals", max_evals, "evaluation budget per restart");
    sub_search->add_option("--trace", trace_path, "write per-iteration CSV here");
    sub_dit->require_subcommand(1);

    try {
        app.parse(argc, argv);
        if (sub_perm->parsed()) return cmd_permanent(perm_file, perm_exact, as_json);
        if (sub_verify->parsed()) return cmd_verify(suite, samples, seed, witness_out, as_json);
        if (sub_table->parsed()) return cmd_table1(restarts, seed, max_evals, trace_path, as_json);
        if (sub_curve->parsed()) return cmd_gap_curve(curve_file, points, curve_out, as_json);
        if (sub_dit->parsed()) {
            if (sub_check->parsed()) return cmd_dittert_check(dit_file, dit_exact, dit_tol, as_json);
            return cmd_dittert_search(restarts, seed, max_evals, trace_path, as_json);
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    } catch (const permlab::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
