// Epoch bookkeeping. An epoch ends when the user has spent every token
// purchased in the previous epoch and its liquid wealth is back at or below
// tau; epoch 0 is the initial accumulation.
#pragma once

#include <cstdint>
#include <vector>

#include "masq/currency.hpp"
#include "masq/protocol.hpp"

namespace masq {

// A run of consecutively issued tokens with one owner. Worst-case
// sequential numbering makes every epoch's purchase timeline a short list
// of such runs; the epoch-granular engine produces them directly and the
// round engine compresses real id sets into them.
struct OwnerRun {
    Party owner = Party::User;
    double count = 0;  // double: epoch-granular counts outgrow int64
};

struct EpochStats {
    std::int64_t index = 0;
    // Doubles: the epoch-granular engine's round counts outgrow int64.
    double start_round = 0;
    double end_round = 0;
    double w_u_total_end = 0;  // currency units (not fixed-point)
    double w_a_total_end = 0;
    double user_tokens = 0;    // |H_u[e]| purchased during the epoch
    double adv_tokens = 0;     // |H_a[e]|
    double user_mev = 0;       // MEV transactions made during the epoch
    double frontruns = 0;
    double backruns = 0;
    std::vector<OwnerRun> timeline;  // purchases in id order
    bool terminal = false;           // cut short by the horizon
};

struct ScenarioConfig;
struct MetricsSeries;

// Recomputes epoch boundaries and per-epoch aggregates from a finished
// round series plus the final token registry. Independent of the engine's
// live epoch counter; tests compare the two.
std::vector<EpochStats> detect_epochs(const MetricsSeries& series, const Ledger& ledger,
                                      Money tau, Money y);

}  // namespace masq
