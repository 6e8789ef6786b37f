#include "masq/config.hpp"

#include <fstream>
#include <sstream>

namespace masq {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Masquerade: return "masquerade";
        case Mode::StatusQuo: return "status-quo";
        case Mode::Ideal: return "ideal";
        case Mode::Phased: return "phased";
    }
    return "?";
}

void ScenarioConfig::validate() const {
    if (rounds <= 0) throw ConfigError("InvalidValue(rounds): must be > 0");
    if (y <= 0) throw ConfigError("InvalidValue(y): must be > 0");
    if (tau <= 0) throw ConfigError("InvalidValue(tau): must be > 0");
    if (f < 0.0 || f > 1.0) throw ConfigError("InvalidValue(f): must be in [0,1]");
    if (p_mev < 0.0 || p_mev > 1.0) throw ConfigError("InvalidValue(p_mev): must be in [0,1]");
    if (fatal_fraction < 0.0 || fatal_fraction > 1.0)
        throw ConfigError("InvalidValue(fatal_fraction): must be in [0,1]");
    if (w_user0 < 0 || w_adv0 < 0) throw ConfigError("InvalidValue(w_user0/w_adv0): negative");
    if (expiry_rounds < 0) throw ConfigError("InvalidValue(expiry_rounds): negative");
    if (block_cap < 0) throw ConfigError("InvalidValue(block_cap): negative");
    if (token_supply < 0) throw ConfigError("InvalidValue(token_supply): negative");
    if (clip_lo <= 0.0 || clip_hi < clip_lo)
        throw ConfigError("InvalidValue(clip_lo/clip_hi): need 0 < lo <= hi");
    if (eta_model == EtaModelKind::Trace && trace_path.empty())
        throw ConfigError("InvalidValue(trace_path): required for eta_model=trace");
    if (supply_alloc != "user_first" && supply_alloc != "adv_first" && supply_alloc != "random")
        throw ConfigError("InvalidValue(supply_alloc): user_first|adv_first|random");
}

namespace {

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw ConfigError("InvalidValue(" + key + "): expected boolean, got '" + v + "'");
}

std::int64_t parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        std::int64_t r = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return r;
    } catch (...) {
        throw ConfigError("InvalidValue(" + key + "): expected integer, got '" + v + "'");
    }
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return r;
    } catch (...) {
        throw ConfigError("InvalidValue(" + key + "): expected number, got '" + v + "'");
    }
}

Money parse_money(const std::string& v, const std::string& key) {
    try {
        return money_from_string(v);
    } catch (...) {
        throw ConfigError("InvalidValue(" + key + "): expected currency, got '" + v + "'");
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    bool tau_given = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("ParseError(" + origin + ":" + std::to_string(lineno) +
                              "): expected key=value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key == "mode") {
            if (val == "masquerade") cfg.mode = Mode::Masquerade;
            else if (val == "status-quo" || val == "status_quo") cfg.mode = Mode::StatusQuo;
            else if (val == "ideal") cfg.mode = Mode::Ideal;
            else if (val == "phased") cfg.mode = Mode::Phased;
            else throw ConfigError("InvalidValue(mode): '" + val + "'");
        } else if (key == "rounds") cfg.rounds = parse_int(val, key);
        else if (key == "w_user0") cfg.w_user0 = parse_money(val, key);
        else if (key == "w_adv0") cfg.w_adv0 = parse_money(val, key);
        else if (key == "y") cfg.y = parse_money(val, key);
        else if (key == "tau") { cfg.tau = parse_money(val, key); tau_given = true; }
        else if (key == "f") cfg.f = parse_double(val, key);
        else if (key == "eta_model") {
            if (val == "constant") cfg.eta_model = EtaModelKind::Constant;
            else if (val == "gaussian") cfg.eta_model = EtaModelKind::Gaussian;
            else if (val == "cauchy") cfg.eta_model = EtaModelKind::Cauchy;
            else if (val == "trace") cfg.eta_model = EtaModelKind::Trace;
            else throw ConfigError("InvalidValue(eta_model): '" + val + "'");
        } else if (key == "eta") cfg.eta = parse_money(val, key);
        else if (key == "eta_mu") cfg.eta_mu = parse_double(val, key);
        else if (key == "eta_sigma") cfg.eta_sigma = parse_double(val, key);
        else if (key == "cauchy_x0") cfg.cauchy_x0 = parse_double(val, key);
        else if (key == "cauchy_gamma") cfg.cauchy_gamma = parse_double(val, key);
        else if (key == "clip_lo") cfg.clip_lo = parse_double(val, key);
        else if (key == "clip_hi") cfg.clip_hi = parse_double(val, key);
        else if (key == "trace_path") cfg.trace_path = val;
        else if (key == "p_mev") cfg.p_mev = parse_double(val, key);
        else if (key == "fatal_fraction") cfg.fatal_fraction = parse_double(val, key);
        else if (key == "refund") cfg.refund = parse_bool(val, key);
        else if (key == "expiry_rounds") cfg.expiry_rounds = parse_int(val, key);
        else if (key == "block_cap") cfg.block_cap = parse_int(val, key);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(val, key));
        else if (key == "user_gate") {
            if (val == "threshold_latch") cfg.user_gate = UserGate::ThresholdLatch;
            else if (val == "opportunistic") cfg.user_gate = UserGate::Opportunistic;
            else throw ConfigError("InvalidValue(user_gate): '" + val + "'");
        } else if (key == "adv_info") {
            if (val == "sighted") cfg.adv_info = AdvInfo::Sighted;
            else if (val == "blind") cfg.adv_info = AdvInfo::Blind;
            else throw ConfigError("InvalidValue(adv_info): '" + val + "'");
        } else if (key == "token_order") {
            if (val == "worst_case") cfg.token_order = TokenOrder::WorstCaseSequential;
            else if (val == "lottery") cfg.token_order = TokenOrder::Lottery;
            else throw ConfigError("InvalidValue(token_order): '" + val + "'");
        } else if (key == "token_supply") cfg.token_supply = parse_int(val, key);
        else if (key == "supply_alloc") cfg.supply_alloc = val;
        else throw ConfigError("UnknownKey(" + key + ") at " + origin + ":" +
                               std::to_string(lineno));
    }
    if (!tau_given) cfg.tau = cfg.y;
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace masq
