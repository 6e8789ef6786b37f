#include "masq/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "masq/matching.hpp"

namespace masq {

namespace {

constexpr double kRelSlack = 1e-9;

bool leq(double a, double b) { return a <= b + kRelSlack * std::max(std::fabs(a), std::fabs(b)); }
bool geq(double a, double b) { return leq(b, a); }

void flag(std::vector<std::string>& out, std::int64_t e, const char* what, double got,
          double bound) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "epoch %lld: %s (got %.6g, bound %.6g)",
                  static_cast<long long>(e), what, got, bound);
    out.emplace_back(buf);
}

}  // namespace

BoundsReport verify_run(const std::vector<EpochStats>& epochs, const BoundParams& p) {
    BoundsReport rep;
    for (const auto& st : epochs) {
        if (st.terminal) continue;  // the horizon cut it short
        EpochBoundsRow row;
        row.epoch = st.index;
        row.w_a = st.w_a_total_end;
        row.w_u = st.w_u_total_end;
        row.adv_upper = adv_wealth_upper(p.w_adv0, p.f, p.eta, p.y, st.index);
        row.adv_lower = adv_wealth_lower(p.w_adv0, p.f, p.eta, p.y, st.index);
        row.user_lower = user_wealth_lower(p.w_user0, p.sigma, p.f, p.eta, p.y, p.tau, st.index);
        if (!leq(row.w_a, row.adv_upper))
            flag(rep.violations, st.index, "adversary wealth above Lemma-1 bound", row.w_a,
                 row.adv_upper);
        if (!geq(row.w_a, row.adv_lower))
            flag(rep.violations, st.index, "adversary wealth below appendix lower bound", row.w_a,
                 row.adv_lower);
        if (!geq(row.w_u, row.user_lower))
            flag(rep.violations, st.index, "user wealth below Lemma-2 bound", row.w_u,
                 row.user_lower);
        row.sigma_ok = row.w_a < p.sigma * row.w_u;
        if (!row.sigma_ok)
            flag(rep.violations, st.index, "sigma ratio violated", row.w_a, p.sigma * row.w_u);
        if (st.index >= 1 && st.user_mev > 0) {
            row.frontrun_fraction = st.frontruns / st.user_mev;
            row.fraction_bound = frontrun_fraction_bound(p, st.index);
            if (!leq(row.frontrun_fraction, row.fraction_bound))
                flag(rep.violations, st.index, "frontrun fraction above bound",
                     row.frontrun_fraction, row.fraction_bound);
        }
        RleBalance bal = check_balanced_timeline(st.timeline);
        row.balanced = bal.balanced;
        row.unmatched_tail = bal.unmatched_tail;
        // |H_a[e]| = floor(W_a[e]/y): the adversary converts all wealth.
        const double expect_tokens = std::floor(row.w_a / p.y + kRelSlack);
        if (st.adv_tokens != 0 || expect_tokens != 0) {
            if (std::fabs(st.adv_tokens - expect_tokens) >
                kRelSlack * std::max(1.0, expect_tokens)) {
                row.balanced = false;
                flag(rep.violations, st.index, "|H_a[e]| != floor(W_a[e]/y)", st.adv_tokens,
                     expect_tokens);
            }
        }
        if (!bal.balanced)
            flag(rep.violations, st.index, "no injective upward mapping", bal.deficit, 0.0);
        row.tail_required = p.c * std::ceil(row.w_a / p.y - kRelSlack);
        if (bal.balanced && !(row.unmatched_tail > row.tail_required))
            flag(rep.proof_violations, st.index, "tail surplus below c*ceil(W_a/y)",
                 row.unmatched_tail, row.tail_required);
        rep.rows.push_back(row);
    }
    return rep;
}

std::string bounds_report_to_csv(const BoundsReport& r) {
    std::ostringstream os;
    os << "epoch,w_adv,adv_upper,adv_lower,w_user,user_lower,frontrun_fraction,"
          "fraction_bound,balanced,unmatched_tail,tail_required,sigma_ok\n";
    char buf[320];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%lld,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%d,%.10g,%.10g,%d\n",
                      static_cast<long long>(row.epoch), row.w_a, row.adv_upper, row.adv_lower,
                      row.w_u, row.user_lower, row.frontrun_fraction, row.fraction_bound,
                      row.balanced ? 1 : 0, row.unmatched_tail, row.tail_required,
                      row.sigma_ok ? 1 : 0);
        os << buf;
    }
    return os.str();
}

}  // namespace masq
