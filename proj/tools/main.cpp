// Command-line front end: classical and quantum q-entropies, conditional
// entropies with entanglement verdicts, Werner-Popescu threshold scans, the
// PPT cross-check, the axiom suite, and the separable-positivity experiment.
//
// Exit codes: 0 success, 1 a check or experiment detected failures,
// 2 invalid input or usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tsallisq/axioms.hpp"
#include "tsallisq/quantum.hpp"
#include "tsallisq/sampling.hpp"
#include "tsallisq/serialization.hpp"
#include "tsallisq/werner.hpp"

namespace {

using tsq::json;

struct RunConfig {
    std::string format = "table";  // table | json | csv
    std::string out_path;          // empty: stdout
    std::uint64_t seed = 20240917;
    std::vector<double> q_grid;    // empty: command default
};

constexpr double verdict_floor = -1e-10;

std::string verdict_for(double value) {
    return value < verdict_floor ? "negative => entangled" : "nonnegative => inconclusive";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + cfg.out_path);
    out << text;
}

std::string render_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows)
        os << k << std::string(width - k.size() + 3, ' ') << v << "\n";
    return os.str();
}

std::string csv_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::ostringstream os;
    os << "metric,value\n";
    for (const auto& [k, v] : rows) os << k << "," << v << "\n";
    return os.str();
}

std::string num6(double v) { return tsq::format_sig(v, 6); }
std::string num12(double v) { return tsq::format_sig(v, 12); }

json parse_json_text(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error(std::string("cannot parse ") + what);
    return j;
}

json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(std::string("cannot open ") + what + " " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), what);
}

tsq::Subsystem parse_given(const std::string& s) {
    if (s == "A" || s == "a") return tsq::Subsystem::A;
    if (s == "B" || s == "b") return tsq::Subsystem::B;
    throw std::runtime_error("--given must be A or B");
}

std::string joined(const std::vector<double>& v, const char* sep, int digits) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += tsq::format_sig(v[i], digits);
    }
    return out;
}

// ---------------------------------------------------------------------------

int run_entropy(const RunConfig& cfg, const std::string& dist_text,
                const std::string& joint_text, const std::string& state_path, double q) {
    std::vector<std::pair<std::string, std::string>> rows;
    json out;
    if (!state_path.empty()) {
        const tsq::BipartiteState s = tsq::state_from_json(load_json_file(state_path, "state"));
        const double sq = tsq::quantum_tsallis(s.rho(), q);
        const double s1 = tsq::von_neumann(s.rho());
        rows = {{"S_q (q = " + num6(q) + ")", num6(sq)}, {"S_1 (von Neumann)", num6(s1)}};
        out = {{"kind", "quantum"}, {"q", tsq::round_sig(q)}, {"tsallis", tsq::round_sig(sq)},
               {"von_neumann", tsq::round_sig(s1)}};
    } else {
        std::vector<double> flat;
        if (!joint_text.empty()) {
            const tsq::JointDist j =
                tsq::joint_from_json(parse_json_text(joint_text, "--joint"));
            flat.assign(j.flat().begin(), j.flat().end());
        } else {
            flat = tsq::dist_from_json(parse_json_text(dist_text, "--dist")).probs();
        }
        const tsq::ProbDist p(flat);
        const double sq = tsq::tsallis_entropy(p, q);
        const double s1 = tsq::shannon_entropy(p);
        rows = {{"S_q (q = " + num6(q) + ")", num6(sq)}, {"S_1 (Shannon)", num6(s1)}};
        out = {{"kind", "classical"}, {"q", tsq::round_sig(q)}, {"tsallis", tsq::round_sig(sq)},
               {"shannon", tsq::round_sig(s1)}};
    }
    if (cfg.format == "json")
        emit(cfg, out.dump(2) + "\n");
    else if (cfg.format == "csv")
        emit(cfg, csv_rows({{"tsallis", num12(out["tsallis"].get<double>())},
                            {out.contains("shannon") ? "shannon" : "von_neumann",
                             num12(out.contains("shannon") ? out["shannon"].get<double>()
                                                           : out["von_neumann"].get<double>())}}));
    else
        emit(cfg, render_rows(rows));
    return 0;
}

int run_cond(const RunConfig& cfg, const std::string& joint_text, const std::string& state_path,
             const std::string& ensemble_path, double q, const std::string& given_text) {
    const tsq::Subsystem given = parse_given(given_text);
    if (!ensemble_path.empty()) {
        const tsq::SeparableEnsemble e =
            tsq::ensemble_from_json(load_json_file(ensemble_path, "ensemble"));
        const double value = tsq::ensemble_conditional(e, q);
        const tsq::ConditionalEntropyReport assembled =
            tsq::conditional_quantum(tsq::assemble_separable(e), q, tsq::Subsystem::A);
        const std::string verdict = verdict_for(assembled.value);
        if (cfg.format == "json") {
            json out{{"kind", "ensemble"},
                     {"q", tsq::round_sig(q)},
                     {"value", tsq::round_sig(value)},
                     {"assembled_value", tsq::round_sig(assembled.value)},
                     {"verdict", verdict}};
            emit(cfg, out.dump(2) + "\n");
        } else if (cfg.format == "csv") {
            emit(cfg, csv_rows({{"value", num12(value)},
                                {"assembled_value", num12(assembled.value)}}));
        } else {
            emit(cfg, render_rows({{"S_q[B|A] (q-expectation)", num6(value)},
                                   {"S_q[B|A] (assembled state)", num6(assembled.value)},
                                   {"verdict", verdict}}));
        }
        return 0;
    }
    if (!state_path.empty()) {
        const tsq::BipartiteState s = tsq::state_from_json(load_json_file(state_path, "state"));
        const tsq::ConditionalEntropyReport r = tsq::conditional_quantum(s, q, given);
        const std::string other = given == tsq::Subsystem::A ? "B|A" : "A|B";
        const std::string verdict = verdict_for(r.value);
        if (cfg.format == "json") {
            json out = tsq::to_json(r);
            out["verdict"] = verdict;
            emit(cfg, out.dump(2) + "\n");
        } else if (cfg.format == "csv") {
            emit(cfg, csv_rows({{"value", num12(r.value)},
                                {"s_joint", num12(r.s_joint)},
                                {"s_marginal", num12(r.s_marginal)}}));
        } else {
            emit(cfg, render_rows({{"S_q[" + other + "] (q = " + num6(q) + ")", num6(r.value)},
                                   {"S_q joint", num6(r.s_joint)},
                                   {"S_q marginal", num6(r.s_marginal)},
                                   {"verdict", verdict}}));
        }
        return 0;
    }
    tsq::JointDist j = tsq::joint_from_json(parse_json_text(joint_text, "--joint"));
    if (given == tsq::Subsystem::B) {
        // condition on columns: transpose the table
        std::vector<double> t(j.rows() * j.cols());
        for (std::size_t a = 0; a < j.rows(); ++a)
            for (std::size_t b = 0; b < j.cols(); ++b) t[b * j.rows() + a] = j.at(a, b);
        j = tsq::JointDist(std::move(t), j.cols(), j.rows());
    }
    const double value = tsq::conditional_tsallis(j, q);
    const std::string label = given == tsq::Subsystem::A ? "S_q[B|A]" : "S_q[A|B]";
    if (cfg.format == "json") {
        json out{{"kind", "classical"},
                 {"q", tsq::round_sig(q)},
                 {"given", tsq::to_string(given)},
                 {"value", tsq::round_sig(value)}};
        emit(cfg, out.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, csv_rows({{"value", num12(value)}}));
    } else {
        emit(cfg, render_rows({{label + " (q = " + num6(q) + ")", num6(value)}}));
    }
    return 0;
}

int run_werner_scan(const RunConfig& cfg, bool criteria_only) {
    if (criteria_only) {
        const tsq::CriterionTable t = tsq::criterion_table();
        if (cfg.format == "json") {
            emit(cfg, tsq::to_json(t).dump(2) + "\n");
        } else if (cfg.format == "csv") {
            emit(cfg, csv_rows({{"bell_bound", num12(t.bell_bound)},
                                {"von_neumann_zero", num12(t.von_neumann_zero)},
                                {"q_infinity_limit", num12(t.q_infinity_limit)},
                                {"ppt_threshold", num12(t.ppt_threshold)}}));
        } else {
            emit(cfg, render_rows({{"Bell (CHSH) bound", num12(t.bell_bound)},
                                   {"von Neumann zero", num12(t.von_neumann_zero)},
                                   {"q -> infinity limit", num12(t.q_infinity_limit)},
                                   {"PPT threshold", num12(t.ppt_threshold)}}));
        }
        return 0;
    }
    const std::vector<double> grid =
        cfg.q_grid.empty() ? tsq::log_spaced_q_grid() : cfg.q_grid;
    const std::vector<tsq::ThresholdPoint> scan = tsq::threshold_scan(grid);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& p : scan) arr.push_back(tsq::to_json(p));
        emit(cfg, arr.dump(2) + "\n");
    } else if (cfg.format == "table") {
        std::vector<std::pair<std::string, std::string>> rows{{"q", "x_star"}};
        for (const auto& p : scan) rows.emplace_back(num6(p.q), num12(p.x_star));
        emit(cfg, render_rows(rows));
    } else {
        std::ostringstream os;
        os << "q,x_star,solver_residual\n";
        for (const auto& p : scan)
            os << num12(p.q) << "," << num12(p.x_star) << "," << num12(p.solver_residual)
               << "\n";
        emit(cfg, os.str());
    }
    return 0;
}

int run_ppt(const RunConfig& cfg, const std::string& state_path) {
    const tsq::BipartiteState s = tsq::state_from_json(load_json_file(state_path, "state"));
    const tsq::PptVerdict v = tsq::ppt_test(s);
    const std::string verdict = v.positive ? "PPT (inconclusive)" : "NPT => entangled";
    if (cfg.format == "json") {
        json out = tsq::to_json(v);
        out["verdict"] = v.positive ? "inconclusive" : "entangled";
        emit(cfg, out.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        emit(cfg, csv_rows({{"min_eigenvalue", num12(v.min_eigenvalue)},
                            {"positive", v.positive ? "true" : "false"}}));
    } else {
        emit(cfg, render_rows({{"min PT eigenvalue", num6(v.min_eigenvalue)},
                               {"verdict", verdict}}));
    }
    return 0;
}

int run_axioms(const RunConfig& cfg, long long trials) {
    const std::vector<double>& grid = cfg.q_grid.empty() ? tsq::default_q_grid() : cfg.q_grid;
    const std::vector<tsq::AxiomReport> reports = tsq::run_axiom_suite(trials, cfg.seed, grid);
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    if (cfg.format == "json") {
        std::ostringstream os;
        for (const auto& r : reports) os << tsq::to_json(r).dump() << "\n";
        emit(cfg, os.str());
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "axiom_id,label,q,trials,max_violation,tolerance,passed\n";
        for (const auto& r : reports)
            os << to_string(r.id) << ",\"" << r.label << "\"," << num12(r.q) << "," << r.trials
               << "," << num12(r.max_violation) << "," << num12(r.tolerance) << ","
               << (r.passed ? "true" : "false") << "\n";
        emit(cfg, os.str());
    } else {
        std::ostringstream os;
        os << "axiom            q        trials  max_violation  tolerance  status\n";
        for (const auto& r : reports) {
            std::ostringstream line;
            line.setf(std::ios::left);
            line.width(17);
            line << to_string(r.id);
            std::string qs = num6(r.q);
            line << qs << std::string(qs.size() < 9 ? 9 - qs.size() : 1, ' ');
            std::string ts = std::to_string(r.trials);
            line << ts << std::string(ts.size() < 8 ? 8 - ts.size() : 1, ' ');
            std::string mv = num6(r.max_violation);
            line << mv << std::string(mv.size() < 15 ? 15 - mv.size() : 1, ' ');
            std::string tl = num6(r.tolerance);
            line << tl << std::string(tl.size() < 11 ? 11 - tl.size() : 1, ' ');
            line << (r.passed ? "ok" : "FAILED") << "  [" << r.label << "]";
            os << line.str() << "\n";
        }
        os << (all_passed ? "all axiom checks passed\n" : "AXIOM CHECK FAILURES\n");
        emit(cfg, os.str());
    }
    return all_passed ? 0 : 1;
}

int run_positivity(const RunConfig& cfg, long long samples, bool inject) {
    const std::vector<double>& grid = cfg.q_grid.empty() ? tsq::default_q_grid() : cfg.q_grid;
    const tsq::PositivitySummary s =
        tsq::separable_positivity_experiment(samples, grid, cfg.seed, inject);
    const bool control_ok = !s.control_value || *s.control_value < verdict_floor;
    const bool passed = s.violations == 0 && control_ok;
    if (cfg.format == "json") {
        json out = tsq::to_json(s);
        out["passed"] = passed;
        emit(cfg, out.dump(2) + "\n");
    } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"samples per arm", std::to_string(s.n_samples)},
            {"seed", std::to_string(s.seed)},
            {"q grid", joined(s.q_grid, ", ", 6)},
            {"min value", num12(s.min_value)},
            {"violations", std::to_string(s.violations)}};
        if (s.control_value)
            rows.emplace_back("control S_1[B|A] (singlet)",
                              num6(*s.control_value) +
                                  (control_ok ? "  (negative, as expected)" : "  (UNEXPECTED)"));
        rows.emplace_back("status", passed ? "ok" : "FAILED");
        emit(cfg, cfg.format == "csv" ? csv_rows(rows) : render_rows(rows));
    }
    return passed ? 0 : 1;
}

int run_gen_werner(const RunConfig& cfg, double x) {
    emit(cfg, tsq::state_to_json(tsq::werner_popescu(x)).dump(2) + "\n");
    return 0;
}

int run_gen_singlet(const RunConfig& cfg) {
    emit(cfg, tsq::state_to_json(tsq::BipartiteState(2, 2, tsq::singlet_projector())).dump(2) +
                  "\n");
    return 0;
}

int run_gen_ensemble(const RunConfig& cfg, int max_terms) {
    tsq::Sampler smp(cfg.seed);
    emit(cfg, tsq::ensemble_to_json(smp.shared_basis_ensemble(2, 2, max_terms)).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tsallis q-entropy toolkit: nonadditive conditional entropies as an "
                 "entanglement witness, with PPT cross-checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string dist_text, joint_text, state_path, ensemble_path, given_text = "A";
    double q = 1.0, x = 0.0;
    long long trials = 200, samples = 10000;
    int max_terms = 4;
    bool criteria_only = false, inject = false;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--output", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write output to a file instead of stdout");
    };

    CLI::App* entropy = app.add_subcommand("entropy", "Tsallis and Shannon/von Neumann entropy");
    entropy->add_option("--q", q, "entropic index")->required();
    entropy->add_option("--dist", dist_text, "probability distribution as a JSON array");
    entropy->add_option("--joint", joint_text, "joint distribution as a nested JSON array");
    entropy->add_option("--state", state_path, "bipartite state JSON file");
    add_common(entropy);

    CLI::App* cond = app.add_subcommand("cond", "conditional q-entropy (negative => entangled)");
    cond->add_option("--q", q, "entropic index")->required();
    cond->add_option("--joint", joint_text, "joint distribution as a nested JSON array");
    cond->add_option("--state", state_path, "bipartite state JSON file");
    cond->add_option("--ensemble", ensemble_path, "separable ensemble JSON file");
    cond->add_option("--given", given_text, "conditioning subsystem (A or B)")
        ->capture_default_str();
    add_common(cond);

    CLI::App* scan = app.add_subcommand("werner-scan",
                                        "separability thresholds of the Werner-Popescu family");
    scan->add_option("--q-grid", cfg.q_grid, "comma-separated q values")->delimiter(',');
    scan->add_flag("--criteria", criteria_only,
                   "print the Bell / von Neumann / q->infinity / PPT criterion table instead");
    add_common(scan);

    CLI::App* ppt = app.add_subcommand("ppt", "partial-transpose (Peres) test");
    ppt->add_option("--state", state_path, "bipartite state JSON file")->required();
    add_common(ppt);

    CLI::App* axioms = app.add_subcommand("axioms", "generalized Shannon-Khinchin axiom suite");
    axioms->add_option("--trials", trials, "random trials per check")->capture_default_str();
    axioms->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    axioms->add_option("--q-grid", cfg.q_grid, "comma-separated q values")->delimiter(',');
    add_common(axioms);

    CLI::App* positivity =
        app.add_subcommand("positivity", "separable states keep S_q[B|A] >= 0 (experiment)");
    positivity->add_option("--samples", samples, "samples per arm")->capture_default_str();
    positivity->add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    positivity->add_option("--q-grid", cfg.q_grid, "comma-separated q values")->delimiter(',');
    positivity->add_flag("--inject-singlet", inject,
                         "also evaluate the singlet control (expected negative)");
    add_common(positivity);

    CLI::App* gen = app.add_subcommand("gen", "generate states and ensembles as JSON");
    gen->require_subcommand(1);
    CLI::App* gen_werner = gen->add_subcommand("werner", "Werner-Popescu state");
    gen_werner->add_option("--x", x, "singlet fraction in [0, 1]")->required();
    add_common(gen_werner);
    CLI::App* gen_singlet = gen->add_subcommand("singlet", "singlet projector");
    add_common(gen_singlet);
    CLI::App* gen_ensemble = gen->add_subcommand("ensemble", "random shared-basis ensemble");
    gen_ensemble->add_option("--seed", cfg.seed, "sampler seed")->capture_default_str();
    gen_ensemble->add_option("--max-terms", max_terms, "maximum ensemble terms")
        ->capture_default_str();
    add_common(gen_ensemble);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (entropy->parsed()) {
            const int sources = (!dist_text.empty()) + (!joint_text.empty()) +
                                (!state_path.empty());
            if (sources != 1)
                throw std::runtime_error("entropy needs exactly one of --dist, --joint, --state");
            return run_entropy(cfg, dist_text, joint_text, state_path, q);
        }
        if (cond->parsed()) {
            const int sources = (!joint_text.empty()) + (!state_path.empty()) +
                                (!ensemble_path.empty());
            if (sources != 1)
                throw std::runtime_error("cond needs exactly one of --joint, --state, --ensemble");
            return run_cond(cfg, joint_text, state_path, ensemble_path, q, given_text);
        }
        if (scan->parsed()) return run_werner_scan(cfg, criteria_only);
        if (ppt->parsed()) return run_ppt(cfg, state_path);
        if (axioms->parsed()) return run_axioms(cfg, trials);
        if (positivity->parsed()) return run_positivity(cfg, samples, inject);
        if (gen_werner->parsed()) return run_gen_werner(cfg, x);
        if (gen_singlet->parsed()) return run_gen_singlet(cfg);
        if (gen_ensemble->parsed()) return run_gen_ensemble(cfg, max_terms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
