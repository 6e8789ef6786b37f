#include "masq/agents.hpp"

#include <algorithm>

namespace masq {

UserAction user_decide(Money liquid, const std::vector<TokenId>& spendable_stock,
                       const Opportunity& opp, const PolicyParams& params,
                       UserVariant variant, bool gate_open) {
    UserAction act;
    if (liquid > params.y) act.buy_count = 1;
    if (!gate_open || !opp.exists || spendable_stock.empty()) return act;
    if (variant == UserVariant::FatalAware && opp.fatal && opp.eta >= params.fatal_value_cap)
        return act;  // skip expensive Type-2 opportunities
    TokenId choice = spendable_stock.front();
    if (variant == UserVariant::Stochastic && opp.eta <= params.eta_pivot &&
        spendable_stock.size() >= 2) {
        choice = spendable_stock[1];  // second lowest on low-value rounds
    }
    act.make_mev = true;
    act.token_choice = choice;
    return act;
}

AdversaryAction adversary_decide(Money liquid, const std::set<TokenId>& owned_tokens,
                                 const AdversaryObservation& obs, const PolicyParams& params,
                                 AdvInfo info, bool lookahead, Money expected_next_eta) {
    AdversaryAction act;
    act.buy_count = money_div(liquid, params.y);
    if (!obs.user_makes_mev || owned_tokens.empty()) return act;
    if (lookahead && expected_next_eta > obs.current_eta) return act;  // save the token
    if (info == AdvInfo::Blind) {
        act.attack = true;
        act.token_choice = *owned_tokens.begin();  // gamble the lowest
        return act;
    }
    // Sighted: largest owned token strictly below T_u; smallest above for
    // the backrun count.
    auto it = owned_tokens.lower_bound(obs.user_token);
    if (it != owned_tokens.begin()) {
        act.attack = true;
        act.token_choice = *std::prev(it);
    }
    auto ub = owned_tokens.upper_bound(obs.user_token);
    if (ub != owned_tokens.end()) act.backrun_token = *ub;
    return act;
}

Settlement settle_mev(Mode mode, bool frontrun, bool backrun, Money eta, double f, Money y,
                      std::int64_t user_buys, std::int64_t adv_buys, bool refund,
                      bool fatal, std::int64_t user_tokens_spent, std::int64_t adv_tokens_spent) {
    Settlement s;
    s.fatal = fatal;
    const Money feta = attacker_share(eta, f);
    if (mode == Mode::StatusQuo) {
        // Every MEV transaction is front run; no tokens change hands.
        s.frontrun = true;
        s.backrun = true;
        s.h_u = eta - feta;
        s.h_a = feta;
        return s;
    }
    if (mode == Mode::Ideal) {
        s.h_u = eta;
        return s;
    }
    s.frontrun = frontrun;
    s.backrun = backrun;
    const Money refund_each = refund ? y : 0;
    s.h_u = -y * user_buys + refund_each * user_tokens_spent;
    s.h_a = -y * adv_buys + refund_each * adv_tokens_spent;
    if (eta > 0) {
        if (frontrun && fatal) {
            s.h_a += eta;  // the victim transaction fails outright
        } else if (frontrun) {
            s.h_u += eta - feta;
            s.h_a += feta;
        } else {
            s.h_u += eta;
        }
    }
    return s;
}

}  // namespace masq
