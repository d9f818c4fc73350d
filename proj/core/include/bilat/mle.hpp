#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bilat/model.hpp"
#include "bilat/table.hpp"

namespace bilat {

enum class Adjustment { none, add_half };

/// Maximum-likelihood fit of the reduced or saturated model. For the reduced
/// model gamma0 and gamma1 coincide. Estimates on the closure of the
/// parameter space are reported with the corresponding boundary flag set;
/// ratios are NaN when their denominator estimate is zero.
struct MleResult {
    ModelKind model = ModelKind::reduced;
    Adjustment adjust = Adjustment::none;
    Cells cells;  // the counts actually fitted (adjusted when add_half)

    double gamma0 = 0, gamma1 = 0;
    double u = 0, v = 0;
    double lambda0 = 0, lambda1 = 0;
    double delta = 0, risk_ratio = 0, odds_ratio = 0;

    bool gamma0_boundary = false, gamma1_boundary = false;
    bool u_boundary = false, v_boundary = false;

    double log_lik = 0, aic = 0, bic = 0;

    double gamma() const { return gamma0; }
    bool any_boundary() const {
        return gamma0_boundary || gamma1_boundary || u_boundary || v_boundary;
    }
};

/// Closed-form MLEs: gamma_i = m_1i/(m_1i + 2 m_2i) (pooled across groups for
/// the reduced model), u = (m_+0 - m_00)/m_+0, v = (m_+1 - m_01)/m_+1.
/// add_half applies the ad-hoc +1/2 adjustment to every cell first.
MleResult mle_reduced(const BilateralTable& table, Adjustment adjust = Adjustment::none);
MleResult mle_saturated(const BilateralTable& table, Adjustment adjust = Adjustment::none);

/// One estimand's Wald interval. Intervals for the risk and odds ratios are
/// built on the log scale and exponentiated back; sd is always reported on
/// the natural scale (for log-scale entries, estimate * se(log)).
struct WaldEntry {
    double estimate = 0;
    bool available = false;  // false when a boundary-degenerate base parameter blocks it
    double sd = 0;
    double lo = 0, hi = 0;
    bool log_scale = false;
};

struct WaldReport {
    double level = 0.95;
    std::vector<std::pair<std::string, WaldEntry>> entries;

    const WaldEntry& operator[](const std::string& name) const;
};

/// Expected-information standard errors and Wald confidence intervals for
/// every estimand of the fit. Estimands touching a boundary-degenerate base
/// parameter are marked unavailable, never fabricated.
WaldReport wald_intervals(const MleResult& mle, double level = 0.95);

/// Standard normal quantile (Acklam's rational approximation refined by one
/// Halley step); |error| < 1e-15 on (0,1).
double normal_quantile(double p);

}  // namespace bilat
