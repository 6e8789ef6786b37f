// Per-opportunity MEV value models: constant, clipped Gaussian, clipped
// Cauchy, and replay of a recorded trace (cycling when exhausted).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "masq/config.hpp"
#include "masq/currency.hpp"
#include "masq/rng.hpp"

namespace masq {

struct TraceFile {
    std::vector<Money> values;  // all > 0, file order
};

struct TraceError : std::runtime_error {
    explicit TraceError(const std::string& m) : std::runtime_error(m) {}
};

// CSV with a `value` header (an optional `round` column is ignored).
// Rejects empty files (EmptyTrace) and non-positive or unparsable rows
// (MalformedRow(n)).
TraceFile load_trace(const std::string& path);

class EtaModel {
public:
    static EtaModel from_config(const ScenarioConfig& cfg);

    // Draws the next value, advancing `rng` (trace mode advances the cursor
    // instead and cycles when the file is exhausted).
    Money sample(Rng& rng);

    EtaModelKind kind() const { return kind_; }

private:
    EtaModelKind kind_ = EtaModelKind::Constant;
    Money constant_ = 0;
    double mu_ = 0, sigma_ = 0, x0_ = 0, gamma_ = 0;
    double clip_lo_ = 1.0, clip_hi_ = 1000.0;
    TraceFile trace_;
    std::size_t cursor_ = 0;
};

}  // namespace masq
