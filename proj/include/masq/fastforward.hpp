// Epoch-granular masquerade engine for the analysis regime.
//
// In the regime the wealth bounds apply to, user wealth multiplies by
// roughly 1 + eta/y per epoch, so a 30-epoch trajectory spans ~10^31 rounds
// and cannot be stepped round by round. Under the preconditions below every
// spending cycle is identical and the whole epoch collapses to a handful of
// exact closed-form updates; an equivalence test pins this recursion to the
// round engine on the epochs small enough to run both.
//
// Preconditions (checked, ConfigError otherwise): masquerade mode,
// threshold-latch user, sighted adversary, worst-case sequential numbering,
// unbounded supply, refund on, no expiry, no fatal opportunities, constant
// eta, p_mev == 1, and divisibility making the cycles exact:
//   eta % y == 0, (f*eta) % y == 0, (w_user0 - tau) % y == 0,
//   w_adv0 % y == 0, tau > y, w_user0 > tau.
#pragma once

#include <vector>

#include "masq/config.hpp"
#include "masq/epochs.hpp"

namespace masq {

// Simulates `epochs`+1 entries (epoch 0 .. epochs). Counts and wealths are
// exact integers as long as they fit a double; beyond 2^53 they carry the
// usual 1-ulp relative error, which the bound checks absorb.
std::vector<EpochStats> run_epochs(const ScenarioConfig& cfg, std::int64_t epochs);

}  // namespace masq
