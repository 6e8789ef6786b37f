// User policy, adversary policy, and per-round MEV reward settlement.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "masq/currency.hpp"
#include "masq/protocol.hpp"

namespace masq {

// Sentinel for "no token" (the policies' infinity).
constexpr TokenId kNoToken = 0;

struct UserAction {
    std::int64_t buy_count = 0;   // X_u[r]
    bool make_mev = false;        // M_u[r]
    TokenId token_choice = kNoToken;  // T_u[r]
};

struct AdversaryAction {
    std::int64_t buy_count = 0;   // X_a[r]
    bool attack = false;          // M_a[r]
    TokenId token_choice = kNoToken;  // T_a[r]
    TokenId backrun_token = kNoToken; // count-only unless the attack itself lands late
};

enum class UserVariant : std::uint8_t { Base, Stochastic, FatalAware };

// When does the user's spending gate open?
//   ThresholdLatch: hoard until liquid <= tau, then spend that hoard
//     (lowest id first) as opportunities arrive; re-hoard once exhausted.
//     This is the epoch-forming behaviour the analysis relies on.
//   Opportunistic: hoard until the first liquid <= tau trigger, then take
//     every opportunity for which a confirmed token is held. Matches the
//     experiments' per-round transaction counts.
enum class UserGate : std::uint8_t { ThresholdLatch, Opportunistic };

// What the adversary can see when choosing its attack token.
//   Sighted: knows T_u[r]; attacks with the largest owned token below it,
//     only when such a token exists.
//   Blind: knows M_u[r] only; gambles its lowest owned token. If the gamble
//     lands above T_u the attack executes as a backrun instead.
enum class AdvInfo : std::uint8_t { Sighted, Blind };

struct PolicyParams {
    Money y = money_from_int(80);         // token cost
    Money tau = money_from_int(80);       // spend-trigger threshold
    Money eta_pivot = money_from_int(100);      // stochastic-variant switch
    Money fatal_value_cap = money_from_int(100);  // Type-2 engagement cap
};

struct Opportunity {
    bool exists = false;
    Money eta = 0;
    bool fatal = false;  // Type 2
};

// Pure decision functions. `owned_tokens` / `stock` must be ascending and
// contain only tokens confirmed before the current round.

// Base variant: buy one token while liquid > y; spend the lowest stock
// token when the gate is open and an opportunity exists. Stochastic
// variant: lowest token if eta > eta_pivot, else second lowest. Fatal-aware
// variant: ignore Type-2 opportunities with eta >= fatal_value_cap.
UserAction user_decide(Money liquid, const std::vector<TokenId>& spendable_stock,
                       const Opportunity& opp, const PolicyParams& params,
                       UserVariant variant, bool gate_open);

struct AdversaryObservation {
    bool user_makes_mev = false;
    TokenId user_token = kNoToken;  // meaningful for Sighted only
    Money current_eta = 0;          // observable opportunity value
};

// Buys floor(liquid/y) every round. Attack per AdvInfo. The lookahead
// variant abstains when the expected next-round value exceeds the current
// one. In sighted mode `backrun_token` is the smallest owned token above
// T_u, reported for the %backrun metric only.
AdversaryAction adversary_decide(Money liquid, const std::set<TokenId>& owned_tokens,
                                 const AdversaryObservation& obs, const PolicyParams& params,
                                 AdvInfo info, bool lookahead, Money expected_next_eta);

enum class Mode : std::uint8_t { Masquerade, StatusQuo, Ideal, Phased };

struct Settlement {
    Money h_u = 0;
    Money h_a = 0;
    bool frontrun = false;
    bool backrun = false;
    bool fatal = false;
};

// Reward bookkeeping for one round, mirroring the per-round reward
// equations: purchase outflows -y*X, the MEV value split, and the +y
// refunds on spent tokens (omitted in no-refund mode). Status-quo forces
// the frontrun split every MEV round; ideal pays the user in full. A fatal
// (Type-2) frontrun hands the entire eta to the adversary.
Settlement settle_mev(Mode mode, bool frontrun, bool backrun, Money eta, double f, Money y,
                      std::int64_t user_buys, std::int64_t adv_buys, bool refund,
                      bool fatal, std::int64_t user_tokens_spent, std::int64_t adv_tokens_spent);

// f*eta rounded to fixed-point once, so every module splits identically.
inline Money attacker_share(Money eta, double f) {
    return money_from_double(money_to_double(eta) * f);
}

}  // namespace masq
