#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bilat/posterior.hpp"

namespace bilat {

struct Interval {
    double lo = 0;
    double hi = 0;
    double width() const { return hi - lo; }
};

struct EstimandStats {
    double mean = 0;
    double sd = 0;
    Interval equal_tailed;
    Interval hpd;
};

/// A named tail-probability request, e.g. {"delta", false, 0.0} for
/// P(delta < 0 | D).
struct TailQuery {
    std::string estimand;
    bool greater = true;
    double threshold = 0;

    std::string label() const;
};

struct PosteriorSummary {
    ModelKind model = ModelKind::reduced;
    double level = 0.95;
    std::size_t draws = 0;
    std::size_t requested = 0;
    double ess = 0;               // effective sample size of the weights
    bool unreliable = false;      // ess < 50
    bool low_m_warning = false;   // carried over from the draw set

    // Ordered as reported: u, v, gamma [gamma0, gamma1], lambda0, lambda1,
    // delta, risk_ratio, odds_ratio [, excess_diff, delta_gamma].
    std::vector<std::pair<std::string, EstimandStats>> stats;
    std::vector<std::pair<std::string, double>> tail_probs;

    const EstimandStats& operator[](const std::string& name) const;
};

/// Weighted posterior summary of every estimand column of the draw set at
/// credible level `level`, plus the requested tail probabilities.
PosteriorSummary summarize(const DrawSet& draws, double level,
                           const std::vector<TailQuery>& tails = {});

/// Chen-Shao HPD interval from draws: sort, then return the narrowest window
/// containing ceil(level*M) order statistics (smallest left index wins ties).
/// Weighted draws are resampled proportional to weight first. Requires at
/// least 100 effective draws and level in (0,1).
Interval hpd_interval(const std::vector<double>& values, const std::vector<double>& weights,
                      double level, std::uint64_t resample_seed = 0);

/// Weighted equal-tailed interval via the alpha/2 and 1-alpha/2 quantiles of
/// the weighted empirical distribution.
Interval equal_tailed_interval(const std::vector<double>& values,
                               const std::vector<double>& weights, double level);

struct DicResult {
    double dic = 0;
    double pd = 0;
};

/// Deviance information criterion with D = -2 logL (multinomial coefficients
/// included) and the plug-in at the posterior mean of the sampling-space
/// parameters (gamma, u, v).
DicResult dic(const DrawSet& draws, const BilateralTable& table);

}  // namespace bilat
