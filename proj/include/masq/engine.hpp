// Round loop: opportunity draw, policy decisions, issuance, block
// formation, validation, settlement, epoch tracking.
#pragma once

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "masq/agents.hpp"
#include "masq/config.hpp"
#include "masq/epochs.hpp"
#include "masq/eta_model.hpp"
#include "masq/metrics.hpp"
#include "masq/protocol.hpp"

namespace masq {

class World {
public:
    explicit World(const ScenarioConfig& cfg);

    RoundRecord step_round();
    // Runs cfg.rounds rounds. Phased mode dispatches to the phase machine.
    MetricsSeries run();

    const Ledger& ledger() const { return ledger_; }
    const ScenarioConfig& config() const { return cfg_; }
    const std::vector<EpochStats>& live_epochs() const { return epochs_; }
    Round current_round() const { return round_; }

private:

    RoundRecord step_masquerade();
    RoundRecord step_baseline();  // status-quo and ideal share a skeleton

    Opportunity draw_opportunity();
    void confirm_pending();
    void update_user_gate();
    void allocate_supply(std::int64_t& want_u, std::int64_t& want_a);
    std::vector<TokenId> do_purchases(Party p, std::int64_t count);
    void spend_and_index(TokenId id);
    void begin_epoch();
    void close_epoch_bookkeeping(bool terminal);
    void record_purchase_runs(const std::vector<TokenId>& ids, Party owner);

    ScenarioConfig cfg_;
    Ledger ledger_;
    EtaModel eta_model_;
    Rng opp_rng_;    // opportunity existence / value / type stream
    Rng alloc_rng_;  // scarce-supply coin flips (separate so modes share opp stream)

    Round round_ = 0;
    // Confirmed, unspent, unexpired tokens per party.
    std::set<TokenId> available_[2];
    std::vector<TokenId> pending_[2];  // bought this round, confirmed next

    // User spending gate.
    bool latched_ = false;
    bool opportunistic_triggered_ = false;
    std::deque<TokenId> stock_;  // threshold-latch snapshot, ascending

    std::int64_t epoch_ = 0;
    std::vector<EpochStats> epochs_;  // live bookkeeping (masquerade only)
    Round epoch_start_round_ = 1;

    // Run counters.
    std::int64_t mev_rounds_ = 0, frontrun_rounds_ = 0, backrun_rounds_ = 0;
    std::int64_t dropped_txns_ = 0;
};

MetricsSeries run_scenario(const ScenarioConfig& cfg);

// Alternates one bulk-purchase round (both parties convert spendable wealth
// to tokens at once, adversary numbered first) with a spend phase of one
// MEV per round until the purchased tokens are gone. Emits the same
// MetricsSeries shape as the continuous engine.
MetricsSeries run_phased(const ScenarioConfig& cfg, std::vector<EpochStats>* epochs_out = nullptr);

}  // namespace masq
