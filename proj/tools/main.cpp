#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tghz/classical.hpp"
#include "tghz/json_io.hpp"
#include "tghz/optimize.hpp"
#include "tghz/paradox.hpp"
#include "tghz/sweep.hpp"

namespace {

using tghz::format_value;

std::string format_complex(std::complex<double> z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + out_path);
    file << text;
    if (!file) throw std::runtime_error("failed writing output path: " + out_path);
}

void reject_csv(const std::string& format, const char* command) {
    if (format == "csv") {
        throw std::invalid_argument(std::string("csv format is only available for sweep, not ") +
                                    command);
    }
}

std::string certification(std::size_t n, std::size_t d, std::optional<double>& closed_form) {
    if (d == 2 && n % 2 == 0 && n >= 4) {
        closed_form = tghz::closed_form_qubit_min(n);
        return "closed_form";
    }
    if (n >= 3 && d % n == 0) {
        closed_form = tghz::closed_form_continuous_min(n);
        return "closed_form (d=kn)";
    }
    closed_form.reset();
    if (d == 2 && n % 2 == 1) return "uncertified (odd n)";
    return "uncertified";
}

std::vector<tghz::SweepSelector> parse_modes(const std::string& mode_list) {
    std::vector<tghz::SweepSelector> out;
    std::stringstream ss(mode_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "qubit") {
            out.push_back({tghz::SweepMode::qubit, 0});
        } else if (item == "continuous") {
            out.push_back({tghz::SweepMode::continuous, 0});
        } else if (item.rfind("numeric(", 0) == 0 && item.back() == ')') {
            const std::string num = item.substr(8, item.size() - 9);
            std::size_t pos = 0;
            const auto d = static_cast<std::size_t>(std::stoull(num, &pos));
            if (pos != num.size()) throw std::invalid_argument("bad numeric dimension: " + item);
            out.push_back({tghz::SweepMode::numeric, d});
        } else {
            throw std::invalid_argument("unknown sweep mode: " + item +
                                        " (expected qubit, continuous, or numeric(D))");
        }
    }
    return out;
}

struct Options {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t m = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    double value = 0.0;
    std::string mode;
    std::uint64_t seed = 0;
    std::size_t restarts = 64;
    std::string out;
    std::string format;
    std::string in;
};

int run_bound(const Options& opt) {
    reject_csv(opt.format, "bound");
    tghz::BoundsConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    const auto result = tghz::minimize(opt.n, opt.d, cfg);
    std::optional<double> closed_form;
    const std::string cert = certification(opt.n, opt.d, closed_form);

    std::string text;
    if (opt.format == "json") {
        nlohmann::json j{{"n", opt.n},
                         {"d", opt.d},
                         {"numeric", tghz::to_json(result)},
                         {"closed_form", closed_form ? nlohmann::json(*closed_form)
                                                     : nlohmann::json(nullptr)},
                         {"certification", cert}};
        text = j.dump(2) + "\n";
    } else {
        text = "n=" + std::to_string(opt.n) + " d=" + std::to_string(opt.d) + "\n";
        text += "numeric_min=" + format_value(result.best_value) + "\n";
        text += "termination=" + tghz::to_string(result.termination) + "\n";
        text += "restarts_run=" + std::to_string(result.restarts_run) + "\n";
        text += "converged_restarts=" + std::to_string(result.converged_restarts) + "\n";
        if (result.exhaustive_skipped) text += "exhaustive_skipped=true\n";
        if (closed_form) text += "closed_form=" + format_value(*closed_form) + "\n";
        text += "certification=" + cert + "\n";
    }
    write_output(text, opt.out);
    if (result.restarts_run > 0 && result.converged_restarts == 0 &&
        result.termination == tghz::Termination::max_iters) {
        std::cerr << "optimizer failed to converge on any restart\n";
        return 1;
    }
    return 0;
}

int run_sweep(const Options& opt) {
    const auto modes = parse_modes(opt.mode.empty() ? "qubit,continuous" : opt.mode);
    tghz::BoundsConfig cfg;
    cfg.restarts = opt.restarts;
    cfg.seed = opt.seed;
    const auto rows = tghz::sweep(opt.n_min, opt.n_max, modes, cfg);
    if (opt.format == "json") {
        write_output(tghz::to_json(rows).dump(2) + "\n", opt.out);
    } else {
        write_output(tghz::sweep_to_csv(rows), opt.out);
    }
    return 0;
}

int run_quantum(const Options& opt) {
    reject_csv(opt.format, "quantum");
    if (opt.m % 2 == 0) {
        throw std::invalid_argument("quantum: m must be odd (no certified family for even m)");
    }
    const auto family = tghz::temporal_witness_family(opt.m);
    const auto state = tghz::ghz_history_state(opt.m);
    const auto report = tghz::verify_ghz_paradox(state, family);

    std::string text;
    if (opt.format == "json") {
        nlohmann::json words = nlohmann::json::array();
        for (const auto& w : family) words.push_back(w.str());
        nlohmann::json j = tghz::to_json(report);
        j["m"] = opt.m;
        j["words"] = std::move(words);
        text = j.dump(2) + "\n";
    } else {
        text = "m=" + std::to_string(opt.m) + " n=" + std::to_string(opt.m + 1) + " d=2\n";
        for (std::size_t i = 0; i < family.size(); ++i) {
            text += "word=" + family[i].str() +
                    " expectation=" + format_complex(report.eigenvalues[i]) + "\n";
        }
        text += "product=" + format_complex(report.quantum_product) + "\n";
        text += "is_common_eigenvector=" + std::string(report.is_common_eigenvector ? "true" : "false") + "\n";
        text += "classical_product_constraint_holds=" +
                std::string(report.classical_product_constraint_holds ? "true" : "false") + "\n";
        text += "is_paradox=" + std::string(report.is_paradox ? "true" : "false") + "\n";
    }
    write_output(text, opt.out);
    return 0;
}

int run_nogo(const Options& opt) {
    reject_csv(opt.format, "nogo");
    const auto report = tghz::odd_dimension_nogo_check(opt.d, opt.m, 20, opt.seed);
    std::string text;
    if (opt.format == "json") {
        text = tghz::to_json(report).dump(2) + "\n";
    } else {
        text = "d=" + std::to_string(opt.d) + " m=" + std::to_string(opt.m) +
               " words_checked=" + std::to_string(report.words_checked) + "\n";
        text += "all_eigenvalues_in_S=" +
                std::string(report.all_eigenvalues_in_S ? "true" : "false") + "\n";
        text += "minus_one_found=" + std::string(report.minus_one_found ? "true" : "false") + "\n";
        text += "max_root_distance=" + format_value(report.max_root_distance) + "\n";
    }
    write_output(text, opt.out);
    return report.minus_one_found ? 1 : 0;
}

int run_classify(const Options& opt) {
    reject_csv(opt.format, "classify");
    tghz::BoundMode mode;
    if (opt.mode == "qubit") {
        mode = tghz::BoundMode::qubit;
    } else if (opt.mode == "continuous") {
        mode = tghz::BoundMode::continuous;
    } else {
        throw std::invalid_argument("classify: mode must be qubit or continuous, got " + opt.mode);
    }
    const auto verdict = tghz::classify(opt.value, opt.n, mode);
    const double bound = mode == tghz::BoundMode::qubit ? tghz::closed_form_qubit_min(opt.n)
                                                        : tghz::closed_form_continuous_min(opt.n);
    const std::string name = verdict == tghz::Verdict::quantum_certified
                                 ? "quantum_certified"
                                 : "classically_explainable";
    std::string text;
    if (opt.format == "json") {
        nlohmann::json j{{"measured", opt.value},
                         {"n", opt.n},
                         {"mode", opt.mode},
                         {"bound", bound},
                         {"verdict", name}};
        text = j.dump(2) + "\n";
    } else {
        text = "measured=" + format_value(opt.value) + " n=" + std::to_string(opt.n) +
               " mode=" + opt.mode + "\n";
        text += "bound=" + format_value(bound) + "\n";
        text += "verdict=" + name + "\n";
    }
    write_output(text, opt.out);
    return 0;
}

int run_verify(const Options& opt) {
    reject_csv(opt.format, "verify");
    nlohmann::json doc;
    std::optional<tghz::Distribution> dist;
    try {
        std::ifstream file(opt.in);
        if (!file) throw std::runtime_error("cannot open " + opt.in);
        file >> doc;
        dist = tghz::distribution_from_json(doc);
    } catch (const std::exception& e) {
        throw std::invalid_argument("verify: invalid distribution document (" +
                                    std::string(e.what()) + ")");
    }
    const auto obj = tghz::evaluate(*dist);
    std::string text;
    if (opt.format == "json") {
        nlohmann::json j{{"n", dist->n()},
                         {"d", dist->dimension()},
                         {"support_size", dist->size()},
                         {"value", obj.value},
                         {"imag_residual", obj.imag_residual},
                         {"valid", true}};
        text = j.dump(2) + "\n";
    } else {
        text = "n=" + std::to_string(dist->n()) + " d=" + std::to_string(dist->dimension()) +
               " support=" + std::to_string(dist->size()) + "\n";
        text += "value=" + format_value(obj.value) + "\n";
        text += "imag_residual=" + format_value(obj.imag_residual) + "\n";
        text += "valid=true\n";
    }
    write_output(text, opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical bounds and quantum witnesses for temporal GHZ tests on entangled "
                 "histories"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Write output to a file instead of stdout");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* bound = app.add_subcommand("bound", "Minimize the classical expectation at (n, d)");
    bound->add_option("--n", opt.n, "Number of witnesses")->required();
    bound->add_option("--d", opt.d, "System dimension")->required();
    bound->add_option("--seed", opt.seed, "Optimizer seed");
    bound->add_option("--restarts", opt.restarts, "Random restarts");
    add_common(bound);

    auto* sweep = app.add_subcommand("sweep", "Tabulate classical minima over a range of n");
    sweep->add_option("--n-min", opt.n_min, "Smallest witness count")->required();
    sweep->add_option("--n-max", opt.n_max, "Largest witness count")->required();
    sweep->add_option("--mode", opt.mode,
                      "Comma-separated modes: qubit, continuous, numeric(D)");
    sweep->add_option("--seed", opt.seed, "Optimizer seed (numeric mode)");
    sweep->add_option("--restarts", opt.restarts, "Random restarts (numeric mode)");
    add_common(sweep);

    auto* quantum = app.add_subcommand("quantum", "Verify the GHZ witness family on m nodes");
    quantum->add_option("--m", opt.m, "Number of time nodes (odd)")->required();
    add_common(quantum);

    auto* nogo = app.add_subcommand("nogo", "Spectral no-go check for odd dimensions");
    nogo->add_option("--d", opt.d, "System dimension (odd)")->required();
    nogo->add_option("--m", opt.m, "Number of time nodes")->default_val(2);
    nogo->add_option("--seed", opt.seed, "Word pool seed");
    add_common(nogo);

    auto* classify = app.add_subcommand("classify", "Compare a measured value to the bound");
    classify->add_option("--value", opt.value, "Measured expectation")->required();
    classify->add_option("--n", opt.n, "Number of witnesses")->required();
    classify->add_option("--mode", opt.mode, "qubit or continuous")->required();
    add_common(classify);

    auto* verify = app.add_subcommand("verify", "Evaluate a distribution JSON document");
    verify->add_option("--in", opt.in, "Distribution JSON path")->required();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(bound)) return run_bound(opt);
        if (app.got_subcommand(sweep)) return run_sweep(opt);
        if (app.got_subcommand(quantum)) return run_quantum(opt);
        if (app.got_subcommand(nogo)) return run_nogo(opt);
        if (app.got_subcommand(classify)) return run_classify(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
