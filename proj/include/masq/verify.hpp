// Composite bound verification over an epoch series.
#pragma once

#include <string>
#include <vector>

#include "masq/bounds.hpp"
#include "masq/epochs.hpp"

namespace masq {

struct EpochBoundsRow {
    std::int64_t epoch = 0;
    double w_a = 0, adv_upper = 0, adv_lower = 0;
    double w_u = 0, user_lower = 0;
    double frontrun_fraction = -1;  // -1 when the epoch had no MEV rounds
    double fraction_bound = -1;
    bool balanced = false;
    double unmatched_tail = 0;
    double tail_required = 0;  // c * ceil(W_a[e]/y)
    bool sigma_ok = false;
};

struct BoundsReport {
    std::vector<EpochBoundsRow> rows;
    std::vector<std::string> violations;        // theorem-statement failures
    std::vector<std::string> proof_violations;  // tail-surplus (proof-internal) failures
    bool ok() const { return violations.empty() && proof_violations.empty(); }
};

// Checks, for every non-terminal epoch:
//   W_a[e] <= adv_wealth_upper(e), W_a[e] >= adv_wealth_lower(e),
//   W_u[e] >= user_wealth_lower(e), W_a[e] < sigma*W_u[e],
//   observed frontrun fraction <= frontrun_fraction_bound(e)  (e >= 1),
//   the epoch is balanced with |H_a[e]| = floor(W_a[e]/y),
//   and the proof-internal tail surplus: user tokens beyond the last
//   matched one exceed c*ceil(W_a[e]/y).
// Inequalities carry a 1e-9 relative slack for float evaluation noise.
BoundsReport verify_run(const std::vector<EpochStats>& epochs, const BoundParams& p);

std::string bounds_report_to_csv(const BoundsReport& r);

}  // namespace masq
