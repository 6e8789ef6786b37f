#include "masq/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace masq {

namespace {

// Engine honesty: these fire only on internal bugs, never on inputs.
[[noreturn]] void engine_bug(const char* what) {
    throw std::logic_error(std::string("engine invariant violated: ") + what);
}

}  // namespace

World::World(const ScenarioConfig& cfg)
    : cfg_(cfg),
      ledger_(cfg.w_user0, cfg.w_adv0, cfg.token_order, cfg.seed),
      eta_model_(EtaModel::from_config(cfg)),
      opp_rng_(Rng(cfg.seed).fork(1)),
      alloc_rng_(Rng(cfg.seed).fork(2)) {
    cfg_.validate();
    epochs_.push_back(EpochStats{});
    epochs_.back().start_round = 1;
}

Opportunity World::draw_opportunity() {
    Opportunity opp;
    opp.exists = opp_rng_.bernoulli(cfg_.p_mev);
    if (!opp.exists) return opp;
    opp.eta = eta_model_.sample(opp_rng_);
    opp.fatal = opp_rng_.bernoulli(cfg_.fatal_fraction);
    return opp;
}

void World::confirm_pending() {
    for (int p = 0; p < 2; ++p) {
        for (TokenId id : pending_[p]) available_[p].insert(id);
        pending_[p].clear();
    }
}

void World::begin_epoch() {
    ++epoch_;
    EpochStats e;
    e.index = epoch_;
    e.start_round = round_;
    epochs_.push_back(e);
}

void World::close_epoch_bookkeeping(bool terminal) {
    EpochStats& e = epochs_.back();
    e.end_round = round_ - 1;
    e.w_u_total_end = money_to_double(ledger_.total(Party::User));
    e.w_a_total_end = money_to_double(ledger_.total(Party::Adversary));
    e.terminal = terminal;
}

void World::update_user_gate() {
    const Money liquid = ledger_.liquid(Party::User);
    if (cfg_.user_gate == UserGate::Opportunistic) {
        if (!opportunistic_triggered_ && liquid <= cfg_.tau) {
            opportunistic_triggered_ = true;
            close_epoch_bookkeeping(false);
            begin_epoch();
        }
        return;
    }
    if (latched_ && stock_.empty()) latched_ = false;
    if (!latched_ && liquid <= cfg_.tau && !available_[0].empty()) {
        // Epoch boundary: the previous hoard is gone and wealth is back at
        // the threshold. Snapshot the next hoard.
        close_epoch_bookkeeping(false);
        begin_epoch();
        stock_.assign(available_[0].begin(), available_[0].end());
        latched_ = true;
    }
}

void World::allocate_supply(std::int64_t& want_u, std::int64_t& want_a) {
    if (cfg_.token_supply <= 0) return;
    std::int64_t slots = cfg_.token_supply;
    if (cfg_.supply_alloc == "user_first") {
        std::int64_t gu = std::min(want_u, slots);
        std::int64_t ga = std::min(want_a, slots - gu);
        want_u = gu;
        want_a = ga;
    } else if (cfg_.supply_alloc == "adv_first") {
        std::int64_t ga = std::min(want_a, slots);
        std::int64_t gu = std::min(want_u, slots - ga);
        want_u = gu;
        want_a = ga;
    } else {  // random: one coin per contested slot
        std::int64_t gu = 0, ga = 0;
        while (slots > 0 && (want_u > 0 || want_a > 0)) {
            bool adv;
            if (want_u > 0 && want_a > 0) adv = alloc_rng_.bernoulli(0.5);
            else adv = want_a > 0;
            if (adv) { ++ga; --want_a; } else { ++gu; --want_u; }
            --slots;
        }
        want_u = gu;
        want_a = ga;
    }
}

std::vector<TokenId> World::do_purchases(Party p, std::int64_t count) {
    if (count <= 0) return {};
    auto ids = ledger_.issue_tokens(p, count, round_, cfg_.y, cfg_.expiry_rounds);
    auto& pend = pending_[static_cast<int>(p)];
    pend.insert(pend.end(), ids.begin(), ids.end());
    record_purchase_runs(ids, p);
    return ids;
}

void World::record_purchase_runs(const std::vector<TokenId>& ids, Party owner) {
    if (ids.empty()) return;
    auto& tl = epochs_.back().timeline;
    if (!tl.empty() && tl.back().owner == owner)
        tl.back().count += static_cast<double>(ids.size());
    else
        tl.push_back(OwnerRun{owner, static_cast<double>(ids.size())});
    if (owner == Party::User) epochs_.back().user_tokens += static_cast<double>(ids.size());
    else epochs_.back().adv_tokens += static_cast<double>(ids.size());
}

void World::spend_and_index(TokenId id) {
    const Token& t = ledger_.token(id);
    available_[static_cast<int>(t.owner)].erase(id);
    ledger_.spend_token(id, round_, cfg_.y, cfg_.refund);
}

RoundRecord World::step_round() {
    ++round_;
    if (cfg_.mode == Mode::Masquerade) return step_masquerade();
    return step_baseline();
}

RoundRecord World::step_baseline() {
    Opportunity opp = draw_opportunity();
    RoundRecord rec;
    rec.round = round_;
    if (opp.exists) {
        Settlement s = settle_mev(cfg_.mode, /*frontrun=*/false, /*backrun=*/false, opp.eta,
                                  cfg_.f, cfg_.y, 0, 0, cfg_.refund, opp.fatal, 0, 0);
        ledger_.credit(Party::User, s.h_u);
        ledger_.credit(Party::Adversary, s.h_a);
        rec.mev_made = true;
        rec.frontrun = s.frontrun;
        rec.backrun = s.backrun;
        rec.fatal = opp.fatal;
        ++mev_rounds_;
        if (s.frontrun) ++frontrun_rounds_;
        if (s.backrun) ++backrun_rounds_;
    }
    rec.w_u_liquid = ledger_.liquid(Party::User);
    rec.w_u_total = ledger_.total(Party::User);
    rec.w_a_liquid = ledger_.liquid(Party::Adversary);
    rec.w_a_total = ledger_.total(Party::Adversary);
    rec.epoch = 0;
    return rec;
}

RoundRecord World::step_masquerade() {
    const Money liquid_u0 = ledger_.liquid(Party::User);
    const Money liquid_a0 = ledger_.liquid(Party::Adversary);
    const Money total0 =
        ledger_.total(Party::User) + ledger_.total(Party::Adversary);

    confirm_pending();

    std::int64_t expired = 0;
    if (cfg_.expiry_rounds > 0) {
        auto burned = ledger_.expire_tokens(round_, cfg_.y);
        expired = static_cast<std::int64_t>(burned.size());
        for (TokenId id : burned) {
            available_[0].erase(id);
            available_[1].erase(id);
            auto it = std::find(stock_.begin(), stock_.end(), id);
            if (it != stock_.end()) stock_.erase(it);
        }
    }

    update_user_gate();
    Opportunity opp = draw_opportunity();

    // --- user decision ---
    PolicyParams params;
    params.y = cfg_.y;
    params.tau = cfg_.tau;
    bool gate_open;
    std::vector<TokenId> spend_view;  // lowest two spendable tokens
    if (cfg_.user_gate == UserGate::ThresholdLatch) {
        gate_open = latched_;
        for (std::size_t i = 0; i < stock_.size() && spend_view.size() < 2; ++i)
            spend_view.push_back(stock_[i]);
    } else {
        gate_open = opportunistic_triggered_;
        for (auto it = available_[0].begin(); it != available_[0].end() && spend_view.size() < 2;
             ++it)
            spend_view.push_back(*it);
    }
    UserAction ua =
        user_decide(liquid_u0, spend_view, opp, params, cfg_.user_variant(), gate_open);

    // --- adversary decision (full observability of the user action) ---
    AdversaryObservation obs;
    obs.user_makes_mev = ua.make_mev;
    obs.user_token = ua.token_choice;
    obs.current_eta = opp.eta;
    AdversaryAction aa = adversary_decide(
        liquid_a0, available_[1], obs, params, cfg_.adv_info, cfg_.adversary_lookahead(),
        money_from_double(cfg_.expected_eta()));

    // --- issuance, adversary requests numbered first (worst case) ---
    std::int64_t want_u = ua.buy_count, want_a = aa.buy_count;
    allocate_supply(want_u, want_a);
    do_purchases(Party::Adversary, want_a);
    do_purchases(Party::User, want_u);

    // --- block formation ---
    std::vector<Transaction> candidates;
    if (want_a > 0)
        candidates.push_back({TxKind::TokenPurchase, Party::Adversary, round_, want_a});
    if (want_u > 0)
        candidates.push_back({TxKind::TokenPurchase, Party::User, round_, want_u});
    if (ua.make_mev) {
        Transaction tx;
        tx.kind = TxKind::TokenizedMev;
        tx.submitter = Party::User;
        tx.round = round_;
        tx.token_id = ua.token_choice;
        tx.opportunity_value = opp.eta;
        tx.fatal = opp.fatal;
        candidates.push_back(tx);
    }
    if (aa.attack) {
        Transaction tx;
        tx.kind = TxKind::TokenizedMev;
        tx.submitter = Party::Adversary;
        tx.round = round_;
        tx.token_id = aa.token_choice;
        tx.opportunity_value = opp.eta;
        candidates.push_back(tx);
    }
    BuildResult built = build_block(round_, candidates, cfg_.block_cap);
    dropped_txns_ += static_cast<std::int64_t>(built.dropped.size());
    if (Violation v = validate_block(built.block, ledger_, cfg_.block_cap); v != Violation::Ok)
        engine_bug(violation_name(v));

    // --- apply: spend tokens, settle the opportunity ---
    bool user_executed = false, adv_executed = false;
    TokenId adv_tok = 0;
    std::int64_t user_spent = 0, adv_spent = 0;
    for (const auto& tx : built.block.transactions) {
        if (tx.kind != TxKind::TokenizedMev) continue;
        spend_and_index(tx.token_id);
        if (tx.submitter == Party::User) {
            user_executed = true;
            ++user_spent;
            if (cfg_.user_gate == UserGate::ThresholdLatch) {
                // The stochastic variant may spend the second-lowest.
                auto end = stock_.begin() + std::min<std::size_t>(2, stock_.size());
                auto it = std::find(stock_.begin(), end, tx.token_id);
                if (it == end) engine_bug("spent token not at the head of the stock");
                stock_.erase(it);
            }
        } else {
            adv_executed = true;
            adv_tok = tx.token_id;
            ++adv_spent;
        }
    }
    const bool frontrun = user_executed && adv_executed && adv_tok < ua.token_choice;
    // A sighted adversary's backrun is counted, not executed; a blind
    // adversary's losing gamble lands after the victim and is the backrun.
    bool backrun = false;
    if (user_executed) {
        if (cfg_.adv_info == AdvInfo::Blind) backrun = adv_executed && !frontrun;
        else backrun = aa.backrun_token != kNoToken;
    }
    const Money eta_minted = user_executed ? opp.eta : 0;
    const bool fatal_hit = frontrun && opp.fatal;
    if (user_executed) {
        const Money feta = attacker_share(opp.eta, cfg_.f);
        if (fatal_hit) {
            ledger_.credit(Party::Adversary, opp.eta);
        } else if (frontrun) {
            ledger_.credit(Party::User, opp.eta - feta);
            ledger_.credit(Party::Adversary, feta);
        } else {
            ledger_.credit(Party::User, opp.eta);
        }
    }

    // --- cross-check ledger deltas against the reward equations ---
    Settlement s = settle_mev(Mode::Masquerade, frontrun, backrun, eta_minted, cfg_.f, cfg_.y,
                              want_u, want_a, cfg_.refund, opp.fatal, user_spent, adv_spent);
    if (ledger_.liquid(Party::User) - liquid_u0 != s.h_u) engine_bug("user reward mismatch");
    if (ledger_.liquid(Party::Adversary) - liquid_a0 != s.h_a) engine_bug("adversary reward mismatch");
    const Money total1 = ledger_.total(Party::User) + ledger_.total(Party::Adversary);
    Money expected_delta = eta_minted - cfg_.y * expired;
    if (!cfg_.refund) expected_delta -= cfg_.y * (user_spent + adv_spent);
    if (total1 - total0 != expected_delta) engine_bug("conservation identity");

    // --- bookkeeping ---
    RoundRecord rec;
    rec.round = round_;
    rec.w_u_liquid = ledger_.liquid(Party::User);
    rec.w_u_total = ledger_.total(Party::User);
    rec.w_a_liquid = ledger_.liquid(Party::Adversary);
    rec.w_a_total = ledger_.total(Party::Adversary);
    rec.mev_made = user_executed;
    rec.frontrun = frontrun;
    rec.backrun = backrun;
    rec.fatal = fatal_hit;
    rec.tokens_bought_u = want_u;
    rec.tokens_bought_a = want_a;
    rec.epoch = epoch_;
    if (user_executed) {
        ++mev_rounds_;
        epochs_.back().user_mev += 1;
        if (frontrun) {
            ++frontrun_rounds_;
            epochs_.back().frontruns += 1;
        }
        if (backrun) {
            ++backrun_rounds_;
            epochs_.back().backruns += 1;
        }
    }
    return rec;
}

MetricsSeries World::run() {
    MetricsSeries out;
    out.rounds.reserve(static_cast<std::size_t>(cfg_.rounds));
    for (std::int64_t i = 0; i < cfg_.rounds; ++i) out.rounds.push_back(step_round());
    ++round_;
    close_epoch_bookkeeping(/*terminal=*/true);
    --round_;
    out.summary = summarize(out.rounds, mode_name(cfg_.mode));
    out.summary.w_u_initial = cfg_.w_user0;
    out.summary.w_a_initial = cfg_.w_adv0;
    out.summary.dropped_txns = dropped_txns_;
    // Streaming counters must agree with the row scan.
    if (out.summary.mev_rounds != mev_rounds_ || out.summary.frontrun_rounds != frontrun_rounds_ ||
        out.summary.backrun_rounds != backrun_rounds_)
        engine_bug("summary counter drift");
    return out;
}

MetricsSeries run_scenario(const ScenarioConfig& cfg) {
    if (cfg.mode == Mode::Phased) return run_phased(cfg);
    World w(cfg);
    return w.run();
}

}  // namespace masq
