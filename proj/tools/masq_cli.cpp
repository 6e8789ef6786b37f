// Command-line front end: run scenarios, parameter sweeps, bound
// verification, and baseline comparisons.
//
// Exit codes: 0 success, 2 usage error, 3 config error, 4 bound violation.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "masq/engine.hpp"
#include "masq/fastforward.hpp"
#include "masq/verify.hpp"

namespace fs = std::filesystem;
using namespace masq;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitBound = 4;

void ensure_out(const std::string& out) {
    if (!out.empty()) fs::create_directories(out);
}

void write_file(const std::string& out, const std::string& name, const std::string& body) {
    if (out.empty()) return;
    std::ofstream f(fs::path(out) / name, std::ios::binary);
    if (!f) throw std::runtime_error("IoError: cannot write " + name);
    f << body;
}

// Numeric config override used by sweep.
void apply_override(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    static const char* numeric_keys[] = {"rounds", "w_user0", "w_adv0", "y", "tau", "f", "eta",
                                         "eta_mu", "eta_sigma", "cauchy_x0", "cauchy_gamma",
                                         "clip_lo", "clip_hi", "p_mev", "fatal_fraction",
                                         "expiry_rounds", "block_cap", "seed", "token_supply"};
    bool known = false;
    for (const char* k : numeric_keys) known = known || key == k;
    if (!known) throw ConfigError("sweep key must be numeric; got '" + key + "'");
    const bool tau_tracks_y = cfg.tau == cfg.y;
    ScenarioConfig parsed = parse_config_text(key + "=" + value + "\n", "<sweep>");
    ScenarioConfig probe = cfg;
    if (key == "rounds") probe.rounds = parsed.rounds;
    else if (key == "w_user0") probe.w_user0 = parsed.w_user0;
    else if (key == "w_adv0") probe.w_adv0 = parsed.w_adv0;
    else if (key == "y") { probe.y = parsed.y; if (tau_tracks_y) probe.tau = parsed.y; }
    else if (key == "tau") probe.tau = parsed.tau;
    else if (key == "f") probe.f = parsed.f;
    else if (key == "eta") probe.eta = parsed.eta;
    else if (key == "eta_mu") probe.eta_mu = parsed.eta_mu;
    else if (key == "eta_sigma") probe.eta_sigma = parsed.eta_sigma;
    else if (key == "cauchy_x0") probe.cauchy_x0 = parsed.cauchy_x0;
    else if (key == "cauchy_gamma") probe.cauchy_gamma = parsed.cauchy_gamma;
    else if (key == "clip_lo") probe.clip_lo = parsed.clip_lo;
    else if (key == "clip_hi") probe.clip_hi = parsed.clip_hi;
    else if (key == "p_mev") probe.p_mev = parsed.p_mev;
    else if (key == "fatal_fraction") probe.fatal_fraction = parsed.fatal_fraction;
    else if (key == "expiry_rounds") probe.expiry_rounds = parsed.expiry_rounds;
    else if (key == "block_cap") probe.block_cap = parsed.block_cap;
    else if (key == "seed") probe.seed = parsed.seed;
    else if (key == "token_supply") probe.token_supply = parsed.token_supply;
    probe.validate();
    cfg = probe;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(cell);
    return out;
}

int cmd_run(const std::string& config_path, const std::string& out, std::int64_t seed_override) {
    ScenarioConfig cfg = load_config(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    MetricsSeries series = run_scenario(cfg);
    ensure_out(out);
    write_file(out, "metrics.csv", metrics_to_csv(series));
    std::vector<SummaryStats> rows{series.summary};
    write_file(out, "summary.csv", summary_to_csv(rows));
    write_file(out, "summary.txt", summary_to_text(rows));
    std::cout << summary_to_text(rows);
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out, const std::string& key,
              const std::string& values, std::int64_t seed_override) {
    ScenarioConfig base = load_config(config_path);
    if (seed_override >= 0) base.seed = static_cast<std::uint64_t>(seed_override);
    auto vals = split_csv(values);
    if (vals.empty()) throw ConfigError("sweep: empty --values");
    std::vector<ScenarioConfig> cfgs;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        ScenarioConfig c = base;
        apply_override(c, key, vals[i]);
        c.seed = base.seed ^ static_cast<std::uint64_t>(i);
        cfgs.push_back(c);
    }
    // One scenario per worker; results ordered by index before emission.
    std::vector<std::future<MetricsSeries>> futs;
    futs.reserve(cfgs.size());
    for (const auto& c : cfgs)
        futs.push_back(std::async(std::launch::async, [c] { return run_scenario(c); }));
    std::vector<SummaryStats> rows;
    ensure_out(out);
    for (std::size_t i = 0; i < futs.size(); ++i) {
        MetricsSeries s = futs[i].get();
        s.summary.mode_label = key + "=" + vals[i];
        rows.push_back(s.summary);
        write_file(out, "metrics_" + key + "_" + vals[i] + ".csv", metrics_to_csv(s));
    }
    write_file(out, "sweep_summary.csv", summary_to_csv(rows));
    write_file(out, "sweep_summary.txt", summary_to_text(rows));
    std::cout << summary_to_text(rows);
    return 0;
}

int cmd_verify(const std::string& config_path, const std::string& out, std::int64_t epochs,
               std::int64_t seeds, double sigma, double epsilon, double c_param) {
    ScenarioConfig cfg = load_config(config_path);
    if (cfg.eta_model != EtaModelKind::Constant)
        throw ConfigError("verify requires a constant eta model");
    BoundParams p;
    p.sigma = sigma;
    p.epsilon = epsilon;
    p.c = c_param;
    p.f = cfg.f;
    p.eta = money_to_double(cfg.eta);
    p.y = money_to_double(cfg.y);
    p.tau = money_to_double(cfg.tau);
    p.w_user0 = money_to_double(cfg.w_user0);
    p.w_adv0 = money_to_double(cfg.w_adv0);
    auto precond = validate_params(p);
    if (!precond.empty()) {
        std::cout << "theorem preconditions violated; refusing to verify:\n";
        for (const auto& v : precond) std::cout << "  " << v << "\n";
        return kExitConfig;
    }
    ensure_out(out);
    std::size_t total_violations = 0;
    for (std::int64_t s = 0; s < seeds; ++s) {
        ScenarioConfig c = cfg;
        c.seed = cfg.seed ^ static_cast<std::uint64_t>(s);
        std::vector<EpochStats> ep;
        try {
            ep = run_epochs(c, epochs);  // epoch-granular engine
        } catch (const ConfigError&) {
            // Config outside the fast regime: fall back to the round engine.
            World w(c);
            w.run();
            ep = w.live_epochs();
            if (static_cast<std::int64_t>(ep.size()) > epochs + 1)
                ep.resize(static_cast<std::size_t>(epochs + 1));
        }
        BoundsReport rep = verify_run(ep, p);
        total_violations += rep.violations.size() + rep.proof_violations.size();
        for (const auto& v : rep.violations) std::cout << "seed " << s << ": " << v << "\n";
        for (const auto& v : rep.proof_violations)
            std::cout << "seed " << s << " [proof invariant]: " << v << "\n";
        if (s == 0) write_file(out, "bounds_report.csv", bounds_report_to_csv(rep));
    }
    std::cout << "verify: " << seeds << " seeds x " << epochs << " epochs, " << total_violations
              << " violations\n";
    return total_violations == 0 ? 0 : kExitBound;
}

int cmd_compare(const std::string& config_path, const std::string& out,
                const std::string& modes_csv, std::int64_t seed_override) {
    ScenarioConfig cfg = load_config(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    auto modes = split_csv(modes_csv.empty() ? "masquerade,status-quo,ideal" : modes_csv);
    std::vector<SummaryStats> rows;
    ensure_out(out);
    for (const auto& m : modes) {
        ScenarioConfig c = cfg;  // same seed: same opportunity stream
        if (m == "masquerade") c.mode = Mode::Masquerade;
        else if (m == "status-quo" || m == "status_quo") c.mode = Mode::StatusQuo;
        else if (m == "ideal") c.mode = Mode::Ideal;
        else if (m == "phased") c.mode = Mode::Phased;
        else throw ConfigError("unknown mode in --modes: '" + m + "'");
        MetricsSeries s = run_scenario(c);
        rows.push_back(s.summary);
        write_file(out, "metrics_" + m + ".csv", metrics_to_csv(s));
    }
    write_file(out, "compare_summary.csv", summary_to_csv(rows));
    write_file(out, "compare_summary.txt", summary_to_text(rows));
    std::cout << summary_to_text(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"masq: token-number transaction-ordering simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, sweep_key, sweep_values, modes;
    std::int64_t seed_override = -1, epochs = 30, seeds = 20;
    double sigma = 0.25, epsilon = 0.02, c_param = 0.2;

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--config", config_path, "scenario config file")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--seed", seed_override, "seed override");

    auto* sweep = app.add_subcommand("sweep", "run one scenario per value of a numeric key");
    sweep->add_option("--config", config_path)->required();
    sweep->add_option("--key", sweep_key, "numeric config key")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->required();
    sweep->add_option("--out", out_dir);
    sweep->add_option("--seed", seed_override);

    auto* verify = app.add_subcommand("verify", "check the provable bounds on simulated epochs");
    verify->add_option("--config", config_path)->required();
    verify->add_option("--epochs", epochs, "epochs to verify (default 30)");
    verify->add_option("--seeds", seeds, "number of seeds (default 20)");
    verify->add_option("--sigma", sigma, "wealth-ratio bound sigma (default 0.25)");
    verify->add_option("--epsilon", epsilon, "slack parameter (default 0.02)");
    verify->add_option("--c-param", c_param, "tail-surplus coefficient (default 0.2)");
    verify->add_option("--out", out_dir);

    auto* compare = app.add_subcommand("compare", "side-by-side summaries on one stream");
    compare->add_option("--config", config_path)->required();
    compare->add_option("--modes", modes, "comma list: masquerade,status-quo,ideal,phased");
    compare->add_option("--out", out_dir);
    compare->add_option("--seed", seed_override);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(run)) return cmd_run(config_path, out_dir, seed_override);
        if (app.got_subcommand(sweep))
            return cmd_sweep(config_path, out_dir, sweep_key, sweep_values, seed_override);
        if (app.got_subcommand(verify))
            return cmd_verify(config_path, out_dir, epochs, seeds, sigma, epsilon, c_param);
        if (app.got_subcommand(compare))
            return cmd_compare(config_path, out_dir, modes, seed_override);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const TraceError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
