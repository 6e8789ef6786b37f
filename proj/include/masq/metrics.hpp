// Per-round records, run summaries, and their CSV forms.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masq/currency.hpp"
#include "masq/protocol.hpp"

namespace masq {

struct RoundRecord {
    Round round = 0;
    Money w_u_liquid = 0, w_u_total = 0;
    Money w_a_liquid = 0, w_a_total = 0;
    bool mev_made = false;
    bool frontrun = false;
    bool backrun = false;
    bool fatal = false;
    std::int64_t tokens_bought_u = 0;
    std::int64_t tokens_bought_a = 0;
    std::int64_t epoch = 0;
};

struct SummaryStats {
    std::string mode_label;
    Money w_u_initial = 0, w_u_final = 0;
    Money w_a_initial = 0, w_a_final = 0;
    std::int64_t mev_rounds = 0;
    std::int64_t frontrun_rounds = 0;
    std::int64_t backrun_rounds = 0;
    std::int64_t dropped_txns = 0;
    double pct_frontrun = 0.0;  // 100 * frontrun_rounds / mev_rounds
    double pct_backrun = 0.0;
};

struct MetricsSeries {
    std::vector<RoundRecord> rounds;
    SummaryStats summary;
};

// Header: round,w_u_liquid,w_u_total,w_a_liquid,w_a_total,mev_made,
// frontrun,backrun,tokens_bought_u,tokens_bought_a,epoch
// LF line endings; currency in the canonical 4-digit form. Writes are
// byte-identical across runs of the same seed.
std::string metrics_to_csv(const MetricsSeries& series);
void write_metrics(const MetricsSeries& series, const std::string& path);
std::vector<RoundRecord> read_metrics_csv(const std::string& path);

// Recomputes the summary from raw rows (the streaming counters are checked
// against this in tests).
SummaryStats summarize(const std::vector<RoundRecord>& rounds, const std::string& mode_label);

std::string summary_to_csv(const std::vector<SummaryStats>& rows);
std::string summary_to_text(const std::vector<SummaryStats>& rows);

}  // namespace masq
