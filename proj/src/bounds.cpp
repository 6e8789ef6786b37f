#include "masq/bounds.hpp"

#include <cmath>

namespace masq {

std::vector<std::string> validate_params(const BoundParams& p) {
    std::vector<std::string> v;
    if (!(p.sigma > 0.0 && p.sigma < 0.5)) v.push_back("sigma must lie in (0, 1/2)");
    if (!(p.w_adv0 < p.sigma * p.w_user0)) v.push_back("W_a[0] < sigma*W_u[0] fails");
    if (!(p.f < (1.0 - p.sigma - p.epsilon) / (1.0 + p.sigma)))
        v.push_back("f < (1-sigma-eps)/(1+sigma) fails");
    if (!(p.epsilon > 0.0)) {
        v.push_back("epsilon must be positive");
    } else {
        if (!(p.epsilon < (p.y * p.f + p.f * p.f * p.eta) / (p.eta * (1.0 - p.f))))
            v.push_back("eps < (y*f + f^2*eta)/(eta*(1-f)) fails");
        if (!(p.w_adv0 > p.y * p.y / (p.eta * p.epsilon)))
            v.push_back("W_a[0] > y^2/(eta*eps) fails");
    }
    if (!(p.tau < p.epsilon * p.w_user0)) v.push_back("tau < eps*W_u[0] fails");
    if (!(1.0 - p.f - p.epsilon > 0.0) || !(p.c > (p.f + p.epsilon) / (1.0 - p.f - p.epsilon)))
        v.push_back("c > (f+eps)/(1-f-eps) fails");
    return v;
}

double adv_wealth_upper(double w_adv0, double f, double eta, double y, std::int64_t k) {
    return w_adv0 * std::pow(1.0 + f * eta / y, static_cast<double>(k));
}

double adv_wealth_lower(double w_adv0, double f, double eta, double y, std::int64_t k) {
    return (w_adv0 - y) * std::pow(1.0 + f * eta / y, static_cast<double>(k)) + y;
}

double user_wealth_lower(double w_user0, double sigma, double f, double eta, double y,
                         double tau, std::int64_t k) {
    const double g = 1.0 + eta / y - sigma * f * eta / y;
    if (!(g > 1.0)) throw DegenerateDenominator("user_wealth_lower: growth factor <= 1");
    const double gk = std::pow(g, static_cast<double>(k));
    return w_user0 * gk - (tau * eta / y) * (gk - 1.0) / (g - 1.0);
}

double frontrun_fraction_bound(const BoundParams& p, std::int64_t e) {
    if (e < 1) throw std::invalid_argument("frontrun_fraction_bound: e >= 1 required");
    const double num = adv_wealth_upper(p.w_adv0, p.f, p.eta, p.y, e - 1);
    const double den =
        user_wealth_lower(p.w_user0, p.sigma, p.f, p.eta, p.y, p.tau, e - 1) - p.tau;
    if (!(den > 0.0)) throw DegenerateDenominator("frontrun_fraction_bound: denominator <= 0");
    return num / den;
}

double optimality_ratio(double y, double eta, double epsilon) {
    const double den = y - eta * epsilon;
    if (!(den > 0.0)) throw DegenerateDenominator("optimality_ratio: y <= eta*epsilon");
    return y / den;
}

}  // namespace masq
