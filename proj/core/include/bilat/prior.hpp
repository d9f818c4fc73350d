#pragma once

#include <string>

#include "bilat/table.hpp"

namespace bilat {

enum class PriorKind { uniform, jeffreys, reference, custom };

/// Hyperparameters of the conjugate prior family over (gamma, u, v):
///
///   pi(gamma,u,v) ∝ gamma^(alpha-1) (1-gamma)^(beta-1) / (1+gamma)^(alpha+beta)
///                   * u^(a0-1)(1-u)^(b0-1) * v^(a1-1)(1-v)^(b1-1) * (u + r v)^d
///
/// The named objective priors are members: uniform = (1,1,1,1,1,1, d=0),
/// reference = (1/2,...,1/2, d=0), Jeffreys = (1/2,...,1/2, d=1/2) with r the
/// sample-size ratio of the table being analysed.
struct PriorSpec {
    PriorKind kind = PriorKind::custom;
    double alpha = 1, beta = 1;
    double a0 = 1, b0 = 1;
    double a1 = 1, b1 = 1;
    double d = 0;
    double r = 0;  // sample-size ratio; meaningful only when d > 0

    bool tilted() const { return d > 0.0; }
};

/// Named prior constructor. The table ratio r is required (strictly positive)
/// only when the kind carries the (u+rv)^d tilt, i.e. Jeffreys.
PriorSpec make_prior(PriorKind kind, double table_ratio = 0.0);

/// Free-shape member of the family. Shapes must be positive and d >= 0;
/// r must be positive when d > 0.
PriorSpec custom_prior(double alpha, double beta, double a0, double b0, double a1, double b1,
                       double d = 0.0, double table_ratio = 0.0);

/// Unnormalized log-density on the open cube (0,1)^3 (normalized when d = 0).
/// Arguments outside the open cube are rejected.
double log_prior_density(const PriorSpec& spec, double gamma, double u, double v);

std::string to_string(PriorKind kind);
PriorKind prior_kind_from_string(const std::string& name);

}  // namespace bilat
