#pragma once

#include <array>

#include "bilat/table.hpp"

namespace bilat {

enum class ModelKind { reduced, saturated };

/// Parameters of the reduced model in the original constrained space
/// Omega = { 0 < gamma < 1, 0 < lambda_i < 1/(1+gamma) }.
struct ReducedParams {
    double gamma = 0;
    double lambda0 = 0;
    double lambda1 = 0;
};

/// Reduced-model parameters on the unit cube: u = (1+gamma)*lambda0,
/// v = (1+gamma)*lambda1. The triplet (gamma,u,v) is orthogonal and each
/// coordinate lives in (0,1).
struct UVParams {
    double gamma = 0;
    double u = 0;
    double v = 0;
};

/// Saturated-model parameters: per-group gamma with u = (1+gamma0)*lambda0,
/// v = (1+gamma1)*lambda1.
struct SaturatedUVParams {
    double gamma0 = 0;
    double gamma1 = 0;
    double u = 0;
    double v = 0;
};

/// Derived quantities of interest. For the reduced model delta_gamma is 0 and
/// excess_diff equals delta.
struct Estimands {
    double delta = 0;       // lambda1 - lambda0
    double risk_ratio = 0;  // lambda1 / lambda0
    double odds_ratio = 0;  // lambda1(1-lambda0) / ((1-lambda1)lambda0)
    double rho0 = 0;        // within-pair correlation, control
    double rho1 = 0;        // within-pair correlation, treatment
    double excess0 = 0;     // 1 - gamma0 - lambda0
    double excess1 = 0;     // 1 - gamma1 - lambda1
    double delta_gamma = 0; // gamma1 - gamma0 (saturated)
    double excess_diff = 0; // excess0 - excess1 = delta_gamma + delta
};

/// Membership in the constrained parameter space Omega.
bool in_omega(const ReducedParams& p);

UVParams to_uv(const ReducedParams& p);
ReducedParams to_omega(const UVParams& p);

/// Cell probabilities (p0, p1, p2) of one group's trinomial:
/// p0 = 1-(1+gamma)*lambda, p1 = 2*gamma*lambda, p2 = (1-gamma)*lambda.
/// Accepts the closure of the admissible set; throws std::domain_error on an
/// inadmissible pair.
std::array<double, 3> trinomial_probs(double gamma, double lambda);

/// Throws std::domain_error when lambda0 (equivalently u) is zero, where the
/// risk and odds ratios are undefined.
Estimands estimands_from(const UVParams& p);
Estimands estimands_from(const SaturatedUVParams& p);

/// Log of the full product-trinomial probability, multinomial coefficients
/// included (so AIC = -2 logL + 2k is comparable across fits). Parameters on
/// the closed boundary of the cube are allowed; a boundary cell probability
/// of zero against a positive count yields -infinity. Arguments outside
/// [0,1]^3 are rejected.
double log_likelihood_reduced(const UVParams& p, const Cells& cells);
double log_likelihood_saturated(const SaturatedUVParams& p, const Cells& cells);

inline double log_likelihood_reduced(const UVParams& p, const BilateralTable& t) {
    return log_likelihood_reduced(p, t.cells());
}
inline double log_likelihood_saturated(const SaturatedUVParams& p, const BilateralTable& t) {
    return log_likelihood_saturated(p, t.cells());
}

}  // namespace bilat
