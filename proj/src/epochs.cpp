#include "masq/epochs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "masq/metrics.hpp"

namespace masq {

// Replays the latch logic against the registry: an epoch starts at the
// first round where the user's previous hoard is fully spent and its liquid
// wealth (at the end of the prior round) is at or below tau.
std::vector<EpochStats> detect_epochs(const MetricsSeries& series, const Ledger& ledger,
                                      Money tau, Money y) {
    (void)y;
    std::vector<EpochStats> out;
    if (series.rounds.empty()) return out;
    const Round first = series.rounds.front().round;
    const Round last = series.rounds.back().round;

    // Per-round user token events.
    std::map<Round, std::vector<TokenId>> user_bought, user_spent, user_expired;
    for (const auto& [id, t] : ledger.registry()) {
        if (t.owner != Party::User) continue;
        user_bought[t.purchase_round].push_back(id);
        if (t.spent()) user_spent[t.spent_round].push_back(id);
        else if (t.expired) user_expired[t.expiry_round].push_back(id);
    }

    auto liquid_before = [&](Round r) -> Money {
        if (r <= first) return series.summary.w_u_initial;
        return series.rounds[static_cast<std::size_t>(r - first - 1)].w_u_liquid;
    };

    std::set<TokenId> owned;  // confirmed and unspent at the round boundary
    std::set<TokenId> stock;
    bool latched = false;
    std::vector<Round> boundaries;  // epoch start rounds (after epoch 0)
    for (Round r = first; r <= last; ++r) {
        // Tokens bought at r-1 confirm here.
        if (auto it = user_bought.find(r - 1); it != user_bought.end())
            for (TokenId id : it->second) owned.insert(id);
        if (auto it = user_expired.find(r); it != user_expired.end())
            for (TokenId id : it->second) { owned.erase(id); stock.erase(id); }
        if (latched && stock.empty()) latched = false;
        if (!latched && liquid_before(r) <= tau && !owned.empty()) {
            boundaries.push_back(r);
            stock = owned;
            latched = true;
        }
        if (auto it = user_spent.find(r); it != user_spent.end())
            for (TokenId id : it->second) { owned.erase(id); stock.erase(id); }
    }

    // Assemble per-epoch aggregates.
    std::vector<Round> starts;
    starts.push_back(first);
    for (Round b : boundaries) starts.push_back(b);
    std::vector<Round> ends(starts.size());
    for (std::size_t e = 0; e < starts.size(); ++e)
        ends[e] = (e + 1 < starts.size()) ? starts[e + 1] - 1 : last;
    for (std::size_t e = 0; e < starts.size(); ++e) {
        EpochStats st;
        st.index = static_cast<std::int64_t>(e);
        st.start_round = static_cast<double>(starts[e]);
        st.end_round = static_cast<double>(ends[e]);
        st.terminal = (e + 1 == starts.size());
        const auto& end_rec = series.rounds[static_cast<std::size_t>(ends[e] - first)];
        st.w_u_total_end = money_to_double(end_rec.w_u_total);
        st.w_a_total_end = money_to_double(end_rec.w_a_total);
        out.push_back(st);
    }
    // Token membership and timeline by purchase round; MEV flags from rows.
    std::vector<std::pair<TokenId, Party>> all_tokens;
    for (const auto& [id, t] : ledger.registry()) all_tokens.emplace_back(id, t.owner);
    std::sort(all_tokens.begin(), all_tokens.end());
    for (std::size_t e = 0; e < out.size(); ++e) {
        EpochStats& st = out[e];
        for (const auto& [id, owner] : all_tokens) {
            const Token& t = ledger.token(id);
            if (t.purchase_round < starts[e] || t.purchase_round > ends[e]) continue;
            if (owner == Party::User) st.user_tokens += 1;
            else st.adv_tokens += 1;
            if (!st.timeline.empty() && st.timeline.back().owner == owner)
                st.timeline.back().count += 1;
            else
                st.timeline.push_back(OwnerRun{owner, 1});
        }
        for (Round r = starts[e]; r <= ends[e]; ++r) {
            const auto& rec = series.rounds[static_cast<std::size_t>(r - first)];
            if (rec.mev_made) {
                st.user_mev += 1;
                if (rec.frontrun) st.frontruns += 1;
                if (rec.backrun) st.backruns += 1;
            }
        }
    }
    return out;
}

}  // namespace masq
