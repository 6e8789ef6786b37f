// Scenario configuration: every experiment parameter, plus the flat
// key=value loader.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "masq/agents.hpp"
#include "masq/currency.hpp"

namespace masq {

enum class EtaModelKind : std::uint8_t { Constant, Gaussian, Cauchy, Trace };

struct ScenarioConfig {
    Mode mode = Mode::Masquerade;
    std::int64_t rounds = 10'000;
    Money w_user0 = money_from_int(1000);
    Money w_adv0 = money_from_int(500);
    Money y = money_from_int(80);
    Money tau = money_from_int(80);   // defaults to y when not given
    double f = 0.8;
    EtaModelKind eta_model = EtaModelKind::Constant;
    Money eta = money_from_int(100);
    double eta_mu = 100.0;
    double eta_sigma = 20.0;
    double cauchy_x0 = 100.0;
    double cauchy_gamma = 20.0;
    double clip_lo = 1.0;
    double clip_hi = 1000.0;
    std::string trace_path;
    double p_mev = 0.5;
    double fatal_fraction = 0.0;
    bool refund = true;
    std::int64_t expiry_rounds = 0;   // 0 == never
    std::int64_t block_cap = 0;      // 0 == unbounded
    std::uint64_t seed = 12345;
    // Experiment-model switches (see agents.hpp for semantics).
    UserGate user_gate = UserGate::ThresholdLatch;
    AdvInfo adv_info = AdvInfo::Sighted;
    TokenOrder token_order = TokenOrder::WorstCaseSequential;
    std::int64_t token_supply = 0;   // per-round issuance cap; 0 == unbounded
    // Who wins scarce supply: "user_first" | "adv_first" | "random".
    std::string supply_alloc = "user_first";

    UserVariant user_variant() const {
        if (fatal_fraction > 0.0) return UserVariant::FatalAware;
        if (eta_model != EtaModelKind::Constant) return UserVariant::Stochastic;
        return UserVariant::Base;
    }
    bool adversary_lookahead() const { return eta_model != EtaModelKind::Constant; }
    // One-step value forecast for the lookahead variant: the distribution
    // mean for Gaussian, the pivot for Cauchy and traces.
    double expected_eta() const {
        return eta_model == EtaModelKind::Gaussian ? eta_mu : 100.0;
    }
    void validate() const;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Flat key=value text; '#' starts a comment; unknown keys are rejected;
// missing keys keep the defaults above. `tau` defaults to `y` when absent.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

const char* mode_name(Mode m);

}  // namespace masq
