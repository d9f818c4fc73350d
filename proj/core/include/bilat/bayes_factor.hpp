#pragma once

#include <cstdint>

#include "bilat/prior.hpp"
#include "bilat/table.hpp"

namespace bilat {

/// log B(a, b); relative error < 1e-12 for positive arguments.
double log_beta(double a, double b);

/// A Bayes factor oriented null-over-alternative (values > 1 support the
/// null). Exact under the reference prior; Monte Carlo under Jeffreys, where
/// the tilt integral E[(U + rV)^(1/2)] and its prior normalizing constant K
/// are estimated by simulation.
struct BfResult {
    enum class Method { exact, monte_carlo };

    double value = 0;
    Method method = Method::exact;
    double mc_se = 0;        // 0 for the exact path
    double k_estimate = 1;   // normalizing constant of the tilted prior
    bool low_m = false;      // M below the Monte Carlo floor
};

/// Bayes factor for H0: lambda0 = lambda1 against the two-rate alternative.
/// prior_kind must be jeffreys or reference. M and seed drive the Monte
/// Carlo path and are ignored by the exact path.
BfResult bf_lambda(const BilateralTable& table, PriorKind prior_kind, std::size_t m = 1000000,
                   std::uint64_t seed = 0);

/// Bayes factor for H0*: gamma1 = gamma0 (reduced model) against the
/// saturated alternative.
BfResult bf_gamma(const BilateralTable& table, PriorKind prior_kind, std::size_t m = 1000000,
                  std::uint64_t seed = 0);

}  // namespace bilat
