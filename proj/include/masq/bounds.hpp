// Closed-form bounds and parameter preconditions for the balanced-policy
// analysis: adversary wealth upper/lower bounds, user wealth lower bound,
// the per-epoch frontrun-fraction bound, and the optimality ratio.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace masq {

struct BoundParams {
    double sigma = 0.25;   // adversary/user wealth ratio bound, in (0, 1/2)
    double epsilon = 0.02; // slack parameter
    double c = 0.2;        // tail-surplus coefficient
    double f = 0.1;
    double eta = 100.0;
    double y = 10.0;
    double tau = 100.0;
    double w_user0 = 10000.0;
    double w_adv0 = 2000.0;
};

// Checks each precondition independently and names the violated ones:
//   W_a0 < sigma*W_u0, sigma < 1/2, f < (1-sigma-eps)/(1+sigma),
//   eps < (y*f + f^2*eta)/(eta*(1-f)), W_a0 > y^2/(eta*eps),
//   tau < eps*W_u0, c > (f+eps)/(1-f-eps).
std::vector<std::string> validate_params(const BoundParams& p);

struct DegenerateDenominator : std::runtime_error {
    explicit DegenerateDenominator(const std::string& m) : std::runtime_error(m) {}
};

// W_a0 * (1 + f*eta/y)^k
double adv_wealth_upper(double w_adv0, double f, double eta, double y, std::int64_t k);

// (W_a0 - y) * (1 + f*eta/y)^k + y
double adv_wealth_lower(double w_adv0, double f, double eta, double y, std::int64_t k);

// W_u0 * g^k - (tau*eta/y) * (g^k - 1)/(g - 1),  g = 1 + eta/y - sigma*f*eta/y
double user_wealth_lower(double w_user0, double sigma, double f, double eta, double y,
                         double tau, std::int64_t k);

// adv_wealth_upper(e-1) / (user_wealth_lower(e-1) - tau); e >= 1.
// Throws DegenerateDenominator when the denominator is not positive.
double frontrun_fraction_bound(const BoundParams& p, std::int64_t e);

// y / (y - eta*epsilon); requires y > eta*epsilon.
double optimality_ratio(double y, double eta, double epsilon);

}  // namespace masq
