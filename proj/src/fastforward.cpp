#include "masq/fastforward.hpp"

#include <cmath>

#include "masq/agents.hpp"
#include "masq/matching.hpp"

namespace masq {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("epoch fast-forward precondition: ") + what);
}

}  // namespace

std::vector<EpochStats> run_epochs(const ScenarioConfig& cfg, std::int64_t epochs) {
    cfg.validate();
    require(cfg.mode == Mode::Masquerade, "mode must be masquerade");
    require(cfg.user_gate == UserGate::ThresholdLatch, "user_gate must be threshold_latch");
    require(cfg.adv_info == AdvInfo::Sighted, "adv_info must be sighted");
    require(cfg.token_order == TokenOrder::WorstCaseSequential, "token_order must be worst_case");
    require(cfg.token_supply == 0, "token_supply must be unbounded");
    require(cfg.refund, "refund must be on");
    require(cfg.expiry_rounds == 0, "expiry must be off");
    require(cfg.fatal_fraction == 0.0, "fatal opportunities unsupported");
    require(cfg.eta_model == EtaModelKind::Constant, "eta must be constant");
    require(cfg.p_mev >= 1.0, "p_mev must be 1");
    require(cfg.block_cap == 0, "block cap must be unbounded");

    const Money y = cfg.y;
    const Money eta = cfg.eta;
    const Money feta = attacker_share(eta, cfg.f);
    require(eta % y == 0, "y must divide eta");
    require(feta % y == 0, "y must divide f*eta");
    require(cfg.tau > y, "tau must exceed y");
    require(cfg.w_user0 > cfg.tau, "w_user0 must exceed tau");
    require((cfg.w_user0 - cfg.tau) % y == 0, "y must divide w_user0 - tau");
    require(cfg.w_adv0 % y == 0, "y must divide w_adv0");

    const double yd = money_to_double(y);
    const double etad = money_to_double(eta);
    const double fetad = money_to_double(feta);
    const double burst = (fetad + yd) / yd;  // adversary tokens per frontrun income

    std::vector<EpochStats> out;
    // Epoch 0: pure accumulation. The adversary converts everything at
    // round 1; the user buys one per round down to tau.
    double m = money_to_double(cfg.w_user0 - cfg.tau) / yd;
    double a = money_to_double(cfg.w_adv0) / yd;
    double w_u = money_to_double(cfg.w_user0);
    double w_a = money_to_double(cfg.w_adv0);
    EpochStats e0;
    e0.index = 0;
    e0.start_round = 1;
    e0.end_round = m;
    e0.user_tokens = m;
    e0.adv_tokens = a;
    if (a > 0) e0.timeline.push_back(OwnerRun{Party::Adversary, a});
    if (m > 0) e0.timeline.push_back(OwnerRun{Party::User, m});
    e0.w_u_total_end = w_u;
    e0.w_a_total_end = w_a;
    out.push_back(e0);

    for (std::int64_t e = 1; e <= epochs; ++e) {
        const EpochStats& prev = out.back();
        // The previous epoch's structure must let the greedy adversary use
        // every one of its tokens (each has a later user token to map to).
        RleBalance bal = check_balanced_timeline(prev.timeline);
        require(bal.balanced, "previous epoch not balanced; regime assumption broken");
        require(a + static_cast<double>(e) <= m, "adversary hoard caught up with the user's");

        const double fr = a;            // one frontrun per adversary token
        const double mev = m;           // the user spends its whole hoard
        const double m_next = m * (1.0 + etad / yd) - a * fetad / yd;
        const double a_next = a * burst;
        w_u += mev * etad - fr * fetad;
        w_a += fr * fetad;

        EpochStats st;
        st.index = e;
        st.start_round = prev.end_round + 1;
        st.end_round = prev.end_round + m_next;  // one purchase per round
        st.user_tokens = m_next;
        st.adv_tokens = a_next;
        st.user_mev = mev;
        st.frontruns = fr;
        st.w_u_total_end = w_u;
        st.w_a_total_end = w_a;
        // Purchase timeline. The user's e leading spends of epoch e cannot
        // be attacked (they spend the previous epoch's head run, which sits
        // below every adversary token), so e user purchases precede the
        // first burst; each frontrun then pays out a burst numbered just
        // before that round's user buy. For the greedy balance scan
        // (running deficit of unmatched adversary tokens) the collapsed
        // form below gives identical deficit and tail, so the repetitions
        // need not be materialized.
        const double head = static_cast<double>(e);
        if (a > 0) {
            st.timeline.push_back(OwnerRun{Party::User, head});
            st.timeline.push_back(OwnerRun{Party::Adversary, a * burst});
            st.timeline.push_back(OwnerRun{Party::User, m_next - head});
        } else {
            st.timeline.push_back(OwnerRun{Party::User, m_next});
        }
        out.push_back(st);
        m = m_next;
        a = a_next;
    }
    return out;
}

}  // namespace masq
