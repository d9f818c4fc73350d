#include "bilat/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bilat {

namespace {

constexpr double kProbSlack = 1e-9;  // tolerance for p0 at the lambda = 1/(1+gamma) edge

void require_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " outside [0,1]");
    }
}

// count * log(prob) with the 0 * log(0) = 0 convention.
double xlogy(double count, double prob) {
    if (count == 0.0) return 0.0;
    if (prob <= 0.0) return -std::numeric_limits<double>::infinity();
    return count * std::log(prob);
}

double log_multinomial_coeff(double n, double k0, double k1, double k2) {
    return std::lgamma(n + 1.0) - std::lgamma(k0 + 1.0) - std::lgamma(k1 + 1.0) -
           std::lgamma(k2 + 1.0);
}

// One group's contribution: coefficient plus trinomial log-mass at
// (gamma, w) where w = (1+gamma)*lambda.
double group_log_lik(double gamma, double w, double k0, double k1, double k2) {
    const double lambda = w / (1.0 + gamma);
    const double p0 = 1.0 - w;
    const double p1 = 2.0 * gamma * lambda;
    const double p2 = (1.0 - gamma) * lambda;
    return log_multinomial_coeff(k0 + k1 + k2, k0, k1, k2) + xlogy(k0, p0) + xlogy(k1, p1) +
           xlogy(k2, p2);
}

}  // namespace

bool in_omega(const ReducedParams& p) {
    if (!(p.gamma > 0.0 && p.gamma < 1.0)) return false;
    const double cap = 1.0 / (1.0 + p.gamma);
    return p.lambda0 > 0.0 && p.lambda0 < cap && p.lambda1 > 0.0 && p.lambda1 < cap;
}

UVParams to_uv(const ReducedParams& p) {
    return UVParams{p.gamma, (1.0 + p.gamma) * p.lambda0, (1.0 + p.gamma) * p.lambda1};
}

ReducedParams to_omega(const UVParams& p) {
    return ReducedParams{p.gamma, p.u / (1.0 + p.gamma), p.v / (1.0 + p.gamma)};
}

std::array<double, 3> trinomial_probs(double gamma, double lambda) {
    if (!(gamma >= 0.0 && gamma <= 1.0) || !(lambda >= 0.0)) {
        throw std::domain_error("trinomial_probs: inadmissible (gamma, lambda)");
    }
    double p0 = 1.0 - (1.0 + gamma) * lambda;
    if (p0 < 0.0) {
        if (p0 < -kProbSlack) {
            throw std::domain_error("trinomial_probs: lambda exceeds 1/(1+gamma)");
        }
        p0 = 0.0;
    }
    return {p0, 2.0 * gamma * lambda, (1.0 - gamma) * lambda};
}

Estimands estimands_from(const UVParams& p) {
    return estimands_from(SaturatedUVParams{p.gamma, p.gamma, p.u, p.v});
}

Estimands estimands_from(const SaturatedUVParams& p) {
    if (p.u == 0.0) {
        throw std::domain_error("estimands undefined: u = 0 (risk and odds ratios)");
    }
    const double lambda0 = p.u / (1.0 + p.gamma0);
    const double lambda1 = p.v / (1.0 + p.gamma1);

    Estimands e;
    e.delta = lambda1 - lambda0;
    e.risk_ratio = lambda1 / lambda0;
    e.odds_ratio = lambda1 * (1.0 - lambda0) / ((1.0 - lambda1) * lambda0);
    e.rho0 = 1.0 - p.gamma0 / (1.0 - lambda0);
    e.rho1 = 1.0 - p.gamma1 / (1.0 - lambda1);
    e.excess0 = 1.0 - p.gamma0 - lambda0;
    e.excess1 = 1.0 - p.gamma1 - lambda1;
    e.delta_gamma = p.gamma1 - p.gamma0;
    e.excess_diff = e.delta_gamma + e.delta;
    return e;
}

double log_likelihood_reduced(const UVParams& p, const Cells& cells) {
    return log_likelihood_saturated(SaturatedUVParams{p.gamma, p.gamma, p.u, p.v}, cells);
}

double log_likelihood_saturated(const SaturatedUVParams& p, const Cells& cells) {
    require_unit_interval(p.gamma0, "gamma0");
    require_unit_interval(p.gamma1, "gamma1");
    require_unit_interval(p.u, "u");
    require_unit_interval(p.v, "v");
    return group_log_lik(p.gamma0, p.u, cells.m00, cells.m10, cells.m20) +
           group_log_lik(p.gamma1, p.v, cells.m01, cells.m11, cells.m21);
}

}  // namespace bilat
