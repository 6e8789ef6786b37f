// Balanced-epoch oracle: does an injective map m from the adversary's
// epoch tokens into the user's exist with m(T) > T for every T? Greedy
// (each adversary token, ascending, takes the smallest unmatched user token
// above it) is exact for this structure.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "masq/epochs.hpp"
#include "masq/protocol.hpp"

namespace masq {

struct BalanceResult {
    bool balanced = false;
    // Greedy mapping (adversary id -> user id) when balanced; on explicit
    // id sets only.
    std::vector<std::pair<TokenId, TokenId>> mapping;
    // First unmatchable adversary token when not balanced.
    std::optional<TokenId> witness;
    // User tokens with ids above every matched user token (the tail the
    // tail-surplus condition counts). Meaningful when balanced.
    double unmatched_tail = 0;
};

// Explicit id sets, both ascending.
BalanceResult check_balanced_epoch(const std::vector<TokenId>& adversary_tokens,
                                   const std::vector<TokenId>& user_tokens);

// Same decision on a run-length timeline (purchases in id order). Scans
// owner runs carrying the count of adversary tokens still unmatched; works
// for counts far beyond anything materializable.
struct RleBalance {
    bool balanced = false;
    double deficit = 0;        // unmatched adversary tokens (0 when balanced)
    double unmatched_tail = 0; // trailing user tokens after the last match
};
RleBalance check_balanced_timeline(const std::vector<OwnerRun>& timeline);

}  // namespace masq
