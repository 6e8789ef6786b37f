#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "masq/engine.hpp"
#include "masq/fastforward.hpp"
#include "masq/matching.hpp"
#include "masq/verify.hpp"

using namespace masq;

namespace {

ScenarioConfig regime_cfg(Money w_user0, Money w_adv0, std::int64_t rounds) {
    ScenarioConfig c;
    c.mode = Mode::Masquerade;
    c.rounds = rounds;
    c.w_user0 = w_user0;
    c.w_adv0 = w_adv0;
    c.y = money_from_int(10);
    c.tau = money_from_int(100);
    c.f = 0.1;
    c.eta = money_from_int(100);
    c.p_mev = 1.0;
    c.seed = 1;
    return c;
}

void check_equal(const EpochStats& a, const EpochStats& b) {
    CHECK(a.index == b.index);
    CHECK(a.start_round == b.start_round);
    CHECK(a.end_round == b.end_round);
    CHECK(a.user_tokens == b.user_tokens);
    CHECK(a.adv_tokens == b.adv_tokens);
    CHECK(a.user_mev == b.user_mev);
    CHECK(a.frontruns == b.frontruns);
    CHECK(a.w_u_total_end == doctest::Approx(b.w_u_total_end));
    CHECK(a.w_a_total_end == doctest::Approx(b.w_a_total_end));
}

}  // namespace

TEST_CASE("epoch recursion reproduces the round engine exactly (small regime)") {
    // Growth is ~11x per epoch; five epochs stay tractable round by round.
    ScenarioConfig c = regime_cfg(money_from_int(1000), money_from_int(200), 130000);
    World w(c);
    auto series = w.run();
    const auto& live = w.live_epochs();
    auto ff = run_epochs(c, 4);
    REQUIRE(live.size() >= 5);
    for (std::size_t e = 0; e <= 4; ++e) {
        if (live[e].terminal) break;
        check_equal(ff[e], live[e]);
    }
    // Balance verdicts and tails agree between the compressed timeline and
    // the real id layout.
    auto det = detect_epochs(series, w.ledger(), c.tau, c.y);
    for (std::size_t e = 0; e + 1 < det.size() && e <= 4; ++e) {
        auto real = check_balanced_timeline(det[e].timeline);
        auto fast = check_balanced_timeline(ff[e].timeline);
        CHECK(real.balanced);
        CHECK(fast.balanced);
        CHECK(real.unmatched_tail == fast.unmatched_tail);
    }
}

TEST_CASE("epoch recursion reproduces the round engine (verification config)") {
    ScenarioConfig c = regime_cfg(money_from_int(10000), money_from_int(2000), 130000);
    World w(c);
    w.run();
    const auto& live = w.live_epochs();
    auto ff = run_epochs(c, 2);
    REQUIRE(live.size() >= 3);
    for (std::size_t e = 0; e <= 2; ++e) {
        if (live[e].terminal) break;
        check_equal(ff[e], live[e]);
    }
}

TEST_CASE("frontruns per epoch equal the adversary's previous-epoch purchases") {
    ScenarioConfig c = regime_cfg(money_from_int(1000), money_from_int(200), 130000);
    World w(c);
    w.run();
    const auto& live = w.live_epochs();
    for (std::size_t e = 1; e < live.size(); ++e) {
        if (live[e].terminal) break;
        CHECK(live[e].frontruns == live[e - 1].adv_tokens);
        CHECK(live[e - 1].adv_tokens ==
              std::floor(live[e - 1].w_a_total_end / money_to_double(c.y)));
        CHECK(live[e].user_mev == live[e - 1].user_tokens);
    }
}

TEST_CASE("preconditions are enforced") {
    ScenarioConfig c = regime_cfg(money_from_int(1000), money_from_int(200), 1000);
    c.p_mev = 0.5;
    CHECK_THROWS_AS(run_epochs(c, 3), ConfigError);
    c = regime_cfg(money_from_int(1000), money_from_int(205), 1000);  // y does not divide w_adv0
    CHECK_THROWS_AS(run_epochs(c, 3), ConfigError);
    c = regime_cfg(money_from_int(1000), money_from_int(200), 1000);
    c.adv_info = AdvInfo::Blind;
    CHECK_THROWS_AS(run_epochs(c, 3), ConfigError);
    c = regime_cfg(money_from_int(1000), money_from_int(200), 1000);
    c.eta = money_from_int(95);  // y does not divide eta
    CHECK_THROWS_AS(run_epochs(c, 3), ConfigError);
}

TEST_CASE("thirty epochs verify clean and stay within the closed-form bounds") {
    ScenarioConfig c = regime_cfg(money_from_int(10000), money_from_int(2000), 1);
    auto ff = run_epochs(c, 30);
    REQUIRE(ff.size() == 31);
    BoundParams p;
    auto rep = verify_run(ff, p);
    CHECK(rep.violations.empty());
    CHECK(rep.proof_violations.empty());
    // Adversary wealth doubles each epoch in this configuration: the upper
    // bound is met with equality.
    CHECK(ff[30].w_a_total_end ==
          doctest::Approx(adv_wealth_upper(2000, 0.1, 100, 10, 30)).epsilon(1e-12));
}

TEST_CASE("per-epoch frontrun fractions decline: last quartile below first") {
    ScenarioConfig c = regime_cfg(money_from_int(10000), money_from_int(2000), 1);
    auto ff = run_epochs(c, 28);
    std::vector<double> frac;
    for (const auto& e : ff)
        if (e.index >= 1) frac.push_back(e.frontruns / e.user_mev);
    REQUIRE(frac.size() == 28);
    double first = 0, last = 0;
    for (int i = 0; i < 7; ++i) first += frac[static_cast<std::size_t>(i)] / 7;
    for (int i = 21; i < 28; ++i) last += frac[static_cast<std::size_t>(i)] / 7;
    CHECK(last < first);
}
