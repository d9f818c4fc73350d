#include "bilat/bayes_factor.hpp"

#include <cmath>
#include <stdexcept>

#include "bilat/rng.hpp"

namespace bilat {

namespace {

constexpr std::size_t kMcFloor = 10000;

struct McEstimate {
    double mean;
    double se;
};

// E[(u + r v)^(1/2)] with u ~ Be(au,bu), v ~ Be(av,bv) independent.
McEstimate mc_sqrt_tilt(double au, double bu, double av, double bv, double r, std::size_t m,
                        std::uint64_t seed, std::string_view label) {
    rng::Stream su(seed, std::string("bf/") + std::string(label) + "/u");
    rng::Stream sv(seed, std::string("bf/") + std::string(label) + "/v");
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double u = su.beta(au, bu);
        const double v = sv.beta(av, bv);
        const double w = std::sqrt(u + r * v);
        sum += w;
        sumsq += w * w;
    }
    const double n = static_cast<double>(m);
    const double mean = sum / n;
    const double var = (sumsq / n - mean * mean) / n;
    return {mean, std::sqrt(var > 0 ? var : 0)};
}

void require_objective(PriorKind kind) {
    if (kind != PriorKind::jeffreys && kind != PriorKind::reference) {
        throw std::invalid_argument("Bayes factors are defined for the jeffreys and reference priors");
    }
}

// Shared Monte Carlo part of the Jeffreys paths: K under the Be(1/2,1/2)^2
// prior, the tilt integral under the H1 posterior Betas. The multiplicative
// factor K/E (bf_lambda) or E/K (bf_gamma) and its relative standard error.
struct TiltRatio {
    double k;
    double integral;
    double rel_se;  // relative SE of the ratio
};

TiltRatio jeffreys_tilt(const BilateralTable& t, std::size_t m, std::uint64_t seed) {
    const double r = t.ratio();
    const auto k = mc_sqrt_tilt(0.5, 0.5, 0.5, 0.5, r, m, seed, "prior");
    const auto e = mc_sqrt_tilt(t.m10 + t.m20 + 0.5, t.m00 + 0.5, t.m11 + t.m21 + 0.5,
                                t.m01 + 0.5, r, m, seed, "posterior");
    const double rel = std::sqrt((k.se / k.mean) * (k.se / k.mean) +
                                 (e.se / e.mean) * (e.se / e.mean));
    return {k.mean, e.mean, rel};
}

}  // namespace

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("log_beta arguments must be positive");
    }
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

BfResult bf_lambda(const BilateralTable& t, PriorKind prior_kind, std::size_t m,
                   std::uint64_t seed) {
    require_objective(prior_kind);
    const bool jeffreys = prior_kind == PriorKind::jeffreys;
    // H0 prior exponent on theta: Be(a, 1/2) with a = 1 (Jeffreys), 1/2 (reference).
    const double a = jeffreys ? 1.0 : 0.5;

    const double m1p = static_cast<double>(t.m_1plus());
    const double m2p = static_cast<double>(t.m_2plus());
    const double m0p = static_cast<double>(t.m_0plus());

    // Multinomial coefficients and the shared gamma-factor Beta cancel in the
    // ratio of marginal predictive distributions.
    double log_bf = log_beta(m1p + m2p + a, m0p + 0.5) - log_beta(a, 0.5) -
                    (log_beta(t.m10 + t.m20 + 0.5, t.m00 + 0.5) - log_beta(0.5, 0.5)) -
                    (log_beta(t.m11 + t.m21 + 0.5, t.m01 + 0.5) - log_beta(0.5, 0.5));

    BfResult out;
    if (!jeffreys) {
        out.value = std::exp(log_bf);
        out.method = BfResult::Method::exact;
        return out;
    }
    const auto tilt = jeffreys_tilt(t, m, seed);
    out.value = std::exp(log_bf) * tilt.k / tilt.integral;
    out.method = BfResult::Method::monte_carlo;
    out.k_estimate = tilt.k;
    out.mc_se = out.value * tilt.rel_se;
    out.low_m = m < kMcFloor;
    return out;
}

BfResult bf_gamma(const BilateralTable& t, PriorKind prior_kind, std::size_t m,
                  std::uint64_t seed) {
    require_objective(prior_kind);
    const bool jeffreys = prior_kind == PriorKind::jeffreys;
    // Saturated-alternative prior on (u, v): Be(a_i, 1/2) with a_i = 1
    // (Jeffreys), 1/2 (reference).
    const double a0 = jeffreys ? 1.0 : 0.5;
    const double a1 = a0;

    const double m1p = static_cast<double>(t.m_1plus());
    const double m2p = static_cast<double>(t.m_2plus());

    double log_bf = log_beta(m1p + 0.5, m2p + 0.5) + log_beta(a0, 0.5) + log_beta(a1, 0.5) -
                    log_beta(t.m10 + 0.5, t.m20 + 0.5) - log_beta(t.m11 + 0.5, t.m21 + 0.5) -
                    log_beta(0.5, 0.5);
    log_bf += log_beta(t.m10 + t.m20 + 0.5, t.m00 + 0.5) +
              log_beta(t.m11 + t.m21 + 0.5, t.m01 + 0.5) -
              log_beta(t.m10 + t.m20 + a0, t.m00 + 0.5) -
              log_beta(t.m11 + t.m21 + a1, t.m01 + 0.5);

    BfResult out;
    if (!jeffreys) {
        out.value = std::exp(log_bf);
        out.method = BfResult::Method::exact;
        return out;
    }
    const auto tilt = jeffreys_tilt(t, m, seed);
    out.value = std::exp(log_bf) * tilt.integral / tilt.k;
    out.method = BfResult::Method::monte_carlo;
    out.k_estimate = tilt.k;
    out.mc_se = out.value * tilt.rel_se;
    out.low_m = m < kMcFloor;
    return out;
}

}  // namespace bilat
