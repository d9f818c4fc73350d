#include "bilat/prior.hpp"

#include <cmath>
#include <stdexcept>

#include "bilat/bayes_factor.hpp"  // log_beta

namespace bilat {

namespace {

void validate_spec(const PriorSpec& s) {
    if (!(s.alpha > 0 && s.beta > 0 && s.a0 > 0 && s.b0 > 0 && s.a1 > 0 && s.b1 > 0)) {
        throw std::invalid_argument("prior shape parameters must be positive");
    }
    if (s.d < 0) throw std::invalid_argument("prior tilt exponent d must be >= 0");
    if (s.d > 0 && !(s.r > 0)) {
        throw std::invalid_argument("tilted prior requires a positive table ratio r");
    }
}

double log_beta_pdf(double x, double a, double b) {
    return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b);
}

}  // namespace

PriorSpec make_prior(PriorKind kind, double table_ratio) {
    PriorSpec s;
    s.kind = kind;
    switch (kind) {
        case PriorKind::uniform:
            s.alpha = s.beta = s.a0 = s.b0 = s.a1 = s.b1 = 1.0;
            s.d = 0.0;
            break;
        case PriorKind::reference:
            s.alpha = s.beta = s.a0 = s.b0 = s.a1 = s.b1 = 0.5;
            s.d = 0.0;
            break;
        case PriorKind::jeffreys:
            s.alpha = s.beta = s.a0 = s.b0 = s.a1 = s.b1 = 0.5;
            s.d = 0.5;
            s.r = table_ratio;
            break;
        case PriorKind::custom:
            throw std::invalid_argument("use custom_prior() to build a custom spec");
    }
    validate_spec(s);
    return s;
}

PriorSpec custom_prior(double alpha, double beta, double a0, double b0, double a1, double b1,
                       double d, double table_ratio) {
    PriorSpec s;
    s.kind = PriorKind::custom;
    s.alpha = alpha;
    s.beta = beta;
    s.a0 = a0;
    s.b0 = b0;
    s.a1 = a1;
    s.b1 = b1;
    s.d = d;
    s.r = table_ratio;
    validate_spec(s);
    return s;
}

double log_prior_density(const PriorSpec& spec, double gamma, double u, double v) {
    if (!(gamma > 0 && gamma < 1 && u > 0 && u < 1 && v > 0 && v < 1)) {
        throw std::invalid_argument("log_prior_density: arguments must lie in (0,1)^3");
    }
    // gamma factor: 2^alpha/B(alpha,beta) * g^(a-1)(1-g)^(b-1)/(1+g)^(a+b)
    double lp = spec.alpha * std::log(2.0) - log_beta(spec.alpha, spec.beta) +
                (spec.alpha - 1.0) * std::log(gamma) + (spec.beta - 1.0) * std::log1p(-gamma) -
                (spec.alpha + spec.beta) * std::log1p(gamma);
    lp += log_beta_pdf(u, spec.a0, spec.b0);
    lp += log_beta_pdf(v, spec.a1, spec.b1);
    if (spec.d > 0) lp += spec.d * std::log(u + spec.r * v);
    return lp;
}

std::string to_string(PriorKind kind) {
    switch (kind) {
        case PriorKind::uniform: return "uniform";
        case PriorKind::jeffreys: return "jeffreys";
        case PriorKind::reference: return "reference";
        case PriorKind::custom: return "custom";
    }
    return "?";
}

PriorKind prior_kind_from_string(const std::string& name) {
    if (name == "uniform") return PriorKind::uniform;
    if (name == "jeffreys") return PriorKind::jeffreys;
    if (name == "reference") return PriorKind::reference;
    if (name == "custom") return PriorKind::custom;
    throw std::invalid_argument("unknown prior kind: " + name);
}

}  // namespace bilat
