#include "masq/eta_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace masq {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

TraceFile load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TraceError("cannot open trace file: " + path);
    TraceFile tf;
    std::string line;
    int lineno = 0;
    int value_col = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(s);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
        if (lineno == 1) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i] == "value") value_col = static_cast<int>(i);
            if (value_col < 0) throw TraceError("trace header must contain a 'value' column");
            continue;
        }
        if (value_col >= static_cast<int>(cells.size()))
            throw TraceError("MalformedRow(" + std::to_string(lineno) + "): missing value");
        double v;
        try {
            std::size_t pos = 0;
            v = std::stod(cells[static_cast<std::size_t>(value_col)], &pos);
            if (pos != cells[static_cast<std::size_t>(value_col)].size())
                throw std::invalid_argument("trailing");
        } catch (...) {
            throw TraceError("MalformedRow(" + std::to_string(lineno) + "): not a number");
        }
        if (!(v > 0.0))
            throw TraceError("MalformedRow(" + std::to_string(lineno) + "): value must be > 0");
        tf.values.push_back(money_from_double(v));
    }
    if (tf.values.empty()) throw TraceError("EmptyTrace");
    return tf;
}

EtaModel EtaModel::from_config(const ScenarioConfig& cfg) {
    EtaModel m;
    m.kind_ = cfg.eta_model;
    m.constant_ = cfg.eta;
    m.mu_ = cfg.eta_mu;
    m.sigma_ = cfg.eta_sigma;
    m.x0_ = cfg.cauchy_x0;
    m.gamma_ = cfg.cauchy_gamma;
    m.clip_lo_ = cfg.clip_lo;
    m.clip_hi_ = cfg.clip_hi;
    if (m.kind_ == EtaModelKind::Trace) m.trace_ = load_trace(cfg.trace_path);
    return m;
}

Money EtaModel::sample(Rng& rng) {
    switch (kind_) {
        case EtaModelKind::Constant:
            return constant_;
        case EtaModelKind::Gaussian: {
            double v = mu_ + sigma_ * rng.next_gaussian();
            return money_from_double(std::clamp(v, clip_lo_, clip_hi_));
        }
        case EtaModelKind::Cauchy: {
            double v = x0_ + gamma_ * rng.next_cauchy();
            return money_from_double(std::clamp(v, clip_lo_, clip_hi_));
        }
        case EtaModelKind::Trace: {
            Money v = trace_.values[cursor_];
            cursor_ = (cursor_ + 1) % trace_.values.size();
            return v;
        }
    }
    return constant_;
}

}  // namespace masq
