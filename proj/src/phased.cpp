#include <algorithm>
#include <set>
#include <stdexcept>

#include "masq/engine.hpp"

namespace masq {

// Phased arrangement: one bulk-purchase round (both parties convert
// spendable wealth to tokens at once, adversary numbered first), then one
// MEV per round until those user tokens are gone, then the next bulk
// purchase. Income pools during spend phases.
//
// Epoch indices line up with the continuous engine: epoch e spends the
// hoard bought in epoch e-1 and ends with the bulk purchase of hoard e, so
// per-epoch wealths are directly comparable.
MetricsSeries run_phased(const ScenarioConfig& cfg, std::vector<EpochStats>* epochs_out) {
    ScenarioConfig c = cfg;
    c.validate();
    Ledger ledger(c.w_user0, c.w_adv0, c.token_order, c.seed);
    EtaModel eta_model = EtaModel::from_config(c);
    Rng opp_rng = Rng(c.seed).fork(1);
    PolicyParams params;
    params.y = c.y;
    params.tau = c.tau;

    std::set<TokenId> avail_a;
    std::deque<TokenId> stock;
    std::vector<EpochStats> epochs;
    epochs.push_back(EpochStats{});
    epochs.back().start_round = 1;

    MetricsSeries out;
    out.rounds.reserve(static_cast<std::size_t>(c.rounds));
    bool bulk_phase = true;

    auto record_runs = [&](std::int64_t n, Party owner) {
        if (n <= 0) return;
        auto& tl = epochs.back().timeline;
        if (!tl.empty() && tl.back().owner == owner) tl.back().count += static_cast<double>(n);
        else tl.push_back(OwnerRun{owner, static_cast<double>(n)});
        (owner == Party::User ? epochs.back().user_tokens : epochs.back().adv_tokens) +=
            static_cast<double>(n);
    };

    for (Round r = 1; r <= c.rounds; ++r) {
        RoundRecord rec;
        rec.round = r;
        if (bulk_phase) {
            std::int64_t buy_a = money_div(ledger.liquid(Party::Adversary), c.y);
            Money spendable_u = ledger.liquid(Party::User) - c.tau;
            std::int64_t buy_u = spendable_u > 0 ? (spendable_u + c.y - 1) / c.y : 0;
            if (buy_u * c.y > ledger.liquid(Party::User))
                buy_u = money_div(ledger.liquid(Party::User), c.y);
            if (buy_u == 0 && stock.empty()) {
                // Cannot restock: idle round, no epoch churn.
                rec.epoch = epochs.back().index;
                rec.w_u_liquid = ledger.liquid(Party::User);
                rec.w_u_total = ledger.total(Party::User);
                rec.w_a_liquid = ledger.liquid(Party::Adversary);
                rec.w_a_total = ledger.total(Party::Adversary);
                out.rounds.push_back(rec);
                continue;
            }
            auto ids_a = ledger.issue_tokens(Party::Adversary, buy_a, r, c.y, c.expiry_rounds);
            auto ids_u = ledger.issue_tokens(Party::User, buy_u, r, c.y, c.expiry_rounds);
            record_runs(buy_a, Party::Adversary);
            record_runs(buy_u, Party::User);
            for (TokenId id : ids_a) avail_a.insert(id);
            for (TokenId id : ids_u) stock.push_back(id);
            std::sort(stock.begin(), stock.end());
            rec.tokens_bought_u = buy_u;
            rec.tokens_bought_a = buy_a;
            rec.epoch = epochs.back().index;  // the bulk round ends this epoch
            epochs.back().end_round = r;
            epochs.back().w_u_total_end = money_to_double(ledger.total(Party::User));
            epochs.back().w_a_total_end = money_to_double(ledger.total(Party::Adversary));
            EpochStats next;
            next.index = epochs.back().index + 1;
            next.start_round = r + 1;
            epochs.push_back(next);
            bulk_phase = stock.empty();
            rec.w_u_liquid = ledger.liquid(Party::User);
            rec.w_u_total = ledger.total(Party::User);
            rec.w_a_liquid = ledger.liquid(Party::Adversary);
            rec.w_a_total = ledger.total(Party::Adversary);
            out.rounds.push_back(rec);
            continue;
        } else {
            // Spend phase: an MEV opportunity every round, tokens confirmed
            // in the bulk round strictly earlier.
            Money eta = eta_model.sample(opp_rng);
            TokenId t_u = stock.front();
            stock.pop_front();
            AdversaryObservation obs{true, t_u, eta};
            AdversaryAction aa =
                adversary_decide(0, avail_a, obs, params, AdvInfo::Sighted, false, 0);
            ledger.spend_token(t_u, r, c.y, c.refund);
            bool frontrun = false;
            if (aa.attack) {
                ledger.spend_token(aa.token_choice, r, c.y, c.refund);
                avail_a.erase(aa.token_choice);
                frontrun = true;
            }
            const Money feta = attacker_share(eta, c.f);
            if (frontrun) {
                ledger.credit(Party::User, eta - feta);
                ledger.credit(Party::Adversary, feta);
            } else {
                ledger.credit(Party::User, eta);
            }
            rec.mev_made = true;
            rec.frontrun = frontrun;
            rec.backrun = aa.backrun_token != kNoToken;
            epochs.back().user_mev += 1;
            if (frontrun) epochs.back().frontruns += 1;
            if (rec.backrun) epochs.back().backruns += 1;
            if (stock.empty()) bulk_phase = true;
            rec.epoch = epochs.back().index;
        }
        rec.w_u_liquid = ledger.liquid(Party::User);
        rec.w_u_total = ledger.total(Party::User);
        rec.w_a_liquid = ledger.liquid(Party::Adversary);
        rec.w_a_total = ledger.total(Party::Adversary);
        out.rounds.push_back(rec);
    }
    epochs.back().end_round = c.rounds;
    epochs.back().w_u_total_end = money_to_double(ledger.total(Party::User));
    epochs.back().w_a_total_end = money_to_double(ledger.total(Party::Adversary));
    epochs.back().terminal = true;
    out.summary = summarize(out.rounds, "phased");
    out.summary.w_u_initial = c.w_user0;
    out.summary.w_a_initial = c.w_adv0;
    if (epochs_out) *epochs_out = epochs;
    return out;
}

}  // namespace masq
