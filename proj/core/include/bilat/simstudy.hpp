#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bilat/table.hpp"

namespace bilat::sim {

/// One true-parameter configuration of the comparison grid.
struct GridPoint {
    double delta_h = 0;   // true risk difference
    double gamma = 0;
    double lambda0 = 0;
    double lambda1 = 0;   // lambda0 + delta_h
    int group_size = 0;   // balanced per-group total m
};

/// The 81-point grid for one (delta, m): gamma_j = j * gamma_max / 10 with
/// gamma_max = min(1, 1/delta - 1), lambda0_k = k * lambda_max(gamma_j) / 10,
/// j, k = 1..9. delta must lie in [0, 0.9] and m >= 2.
std::vector<GridPoint> build_grid(double delta_h, int group_size);

enum class Method { wald, hpd_uniform, hpd_jeffreys, hpd_reference };

std::string to_string(Method method);
Method method_from_string(const std::string& name);

/// Parameters tallied by the harness, in index order.
inline constexpr std::array<const char*, 4> kParameters = {"delta", "gamma", "lambda0",
                                                           "lambda1"};

struct Tally {
    std::int64_t counted = 0;
    std::int64_t covered = 0;
    double width_sum = 0;
    double sqerr_sum = 0;

    double coverage() const { return counted ? static_cast<double>(covered) / counted : 0.0; }
    double mean_width() const { return counted ? width_sum / counted : 0.0; }
    double mse() const { return counted ? sqerr_sum / counted : 0.0; }
};

struct CriteriaSummary {
    GridPoint point;
    double level = 0.9;
    std::size_t n_rep = 0;
    std::vector<Method> methods;
    std::vector<std::array<Tally, 4>> tallies;  // [method][parameter]
    std::vector<std::int64_t> excluded;         // degenerate frequentist fits, per method

    /// Sum of the gamma, lambda0 and lambda1 MSEs.
    double global_mse(std::size_t method_index) const;
};

/// Replicated evaluation of one grid cell: simulate a balanced pair of
/// trinomial columns per replicate, run each method, and tally coverage of
/// the true parameter, interval width, and squared error of the point
/// estimate (posterior mean for the Bayesian methods, MLE for Wald).
/// Replicates whose frequentist fit is degenerate (boundary estimate or zero
/// variance) are excluded from the Wald tallies and counted.
CriteriaSummary run_cell(const GridPoint& point, std::size_t n_rep, double level,
                         const std::vector<Method>& methods, std::size_t m_bayes,
                         std::uint64_t seed);

/// run_cell over a whole grid with per-cell derived seeds. Cells may be
/// evaluated on up to `threads` worker threads; results are independent of
/// the thread count.
std::vector<CriteriaSummary> run_grid(const std::vector<GridPoint>& grid, std::size_t n_rep,
                                      double level, const std::vector<Method>& methods,
                                      std::size_t m_bayes, std::uint64_t seed,
                                      unsigned threads = 1);

struct CoverageReportRow {
    Method method;
    std::string parameter;
    double prop_within_001 = 0;      // |coverage - nominal| <= 0.01
    double prop_above_minus002 = 0;  // coverage >= nominal - 0.02
};

struct CoverageReport {
    double nominal = 0.9;
    std::size_t cells = 0;
    std::vector<CoverageReportRow> rows;

    std::string formatted() const;
};

/// The two summary-proportion rules over a set of cell summaries. Rejects an
/// empty input.
CoverageReport coverage_report(const std::vector<CriteriaSummary>& summaries, double nominal);

/// CSV emission, one row per cell x method x parameter.
std::string criteria_csv(const std::vector<CriteriaSummary>& summaries);

}  // namespace bilat::sim
