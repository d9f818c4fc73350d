#include "bilat/mle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bilat {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double safe_ratio(double num, double den) { return den == 0.0 ? kNan : num / den; }

MleResult fit(const BilateralTable& table, Adjustment adjust, ModelKind model) {
    const Cells c = adjust == Adjustment::add_half ? table.adjusted(0.5) : table.cells();

    MleResult r;
    r.model = model;
    r.adjust = adjust;
    r.cells = c;

    if (model == ModelKind::reduced) {
        const double den = c.m_1plus() + 2.0 * c.m_2plus();
        r.gamma0 = r.gamma1 = den == 0.0 ? kNan : c.m_1plus() / den;
        r.gamma0_boundary = r.gamma1_boundary =
            !(r.gamma0 > 0.0 && r.gamma0 < 1.0);
    } else {
        const double den0 = c.m10 + 2.0 * c.m20;
        const double den1 = c.m11 + 2.0 * c.m21;
        r.gamma0 = den0 == 0.0 ? kNan : c.m10 / den0;
        r.gamma1 = den1 == 0.0 ? kNan : c.m11 / den1;
        r.gamma0_boundary = !(r.gamma0 > 0.0 && r.gamma0 < 1.0);
        r.gamma1_boundary = !(r.gamma1 > 0.0 && r.gamma1 < 1.0);
    }

    r.u = (c.m_plus0() - c.m00) / c.m_plus0();
    r.v = (c.m_plus1() - c.m01) / c.m_plus1();
    r.u_boundary = !(r.u > 0.0 && r.u < 1.0);
    r.v_boundary = !(r.v > 0.0 && r.v < 1.0);

    r.lambda0 = r.u / (1.0 + r.gamma0);
    r.lambda1 = r.v / (1.0 + r.gamma1);
    r.delta = r.lambda1 - r.lambda0;
    r.risk_ratio = safe_ratio(r.lambda1, r.lambda0);
    r.odds_ratio = safe_ratio(r.lambda1 * (1.0 - r.lambda0), (1.0 - r.lambda1) * r.lambda0);

    const int k = model == ModelKind::reduced ? 3 : 4;
    r.log_lik = std::isnan(r.gamma0) || std::isnan(r.gamma1)
                    ? kNan
                    : log_likelihood_saturated(
                          SaturatedUVParams{r.gamma0, r.gamma1, r.u, r.v}, c);
    r.aic = -2.0 * r.log_lik + 2.0 * k;
    r.bic = -2.0 * r.log_lik + k * std::log(c.m_plus0() + c.m_plus1());
    return r;
}

struct BaseVar {
    double var = 0;
    bool ok = false;
};

// Expected-information variance of a gamma_i estimate; w is the matching
// cure-fraction estimate (u for group 0, v for group 1, u + r v pooled).
BaseVar gamma_var(double gamma, double info_scale, bool boundary) {
    if (boundary || std::isnan(gamma)) return {};
    const double one_plus = 1.0 + gamma;
    const double var = gamma * (1.0 - gamma) * one_plus * one_plus / info_scale;
    return {var, var > 0.0};
}

BaseVar binomial_var(double p, double n, bool boundary) {
    if (boundary) return {};
    const double var = p * (1.0 - p) / n;
    return {var, var > 0.0};
}

struct GradTerm {
    const BaseVar* base;
    double grad;
};

WaldEntry delta_method(double estimate, bool log_scale, double z,
                       std::initializer_list<GradTerm> terms) {
    WaldEntry e;
    e.estimate = estimate;
    e.log_scale = log_scale;
    double var = 0;
    for (const auto& t : terms) {
        if (!t.base->ok) return e;  // unavailable
        var += t.grad * t.grad * t.base->var;
    }
    if (!(var >= 0) || std::isnan(estimate)) return e;
    const double se = std::sqrt(var);
    e.available = true;
    if (log_scale) {
        // se is the standard error of log(estimate).
        e.sd = estimate * se;
        e.lo = estimate * std::exp(-z * se);
        e.hi = estimate * std::exp(z * se);
    } else {
        e.sd = se;
        e.lo = estimate - z * se;
        e.hi = estimate + z * se;
    }
    return e;
}

}  // namespace

MleResult mle_reduced(const BilateralTable& table, Adjustment adjust) {
    return fit(table, adjust, ModelKind::reduced);
}

MleResult mle_saturated(const BilateralTable& table, Adjustment adjust) {
    return fit(table, adjust, ModelKind::saturated);
}

const WaldEntry& WaldReport::operator[](const std::string& name) const {
    for (const auto& [n, e] : entries) {
        if (n == name) return e;
    }
    throw std::out_of_range("no Wald entry for estimand " + name);
}

WaldReport wald_intervals(const MleResult& mle, double level) {
    if (!(level > 0 && level < 1)) throw std::invalid_argument("level must be in (0,1)");
    const double z = normal_quantile(0.5 + level / 2.0);
    const Cells& c = mle.cells;
    const double n0 = c.m_plus0();
    const double n1 = c.m_plus1();
    const double r = c.ratio();

    const BaseVar vu = binomial_var(mle.u, n0, mle.u_boundary);
    const BaseVar vv = binomial_var(mle.v, n1, mle.v_boundary);

    BaseVar vg0, vg1;
    if (mle.model == ModelKind::reduced) {
        // I(gamma) = 2 m_+0 (u + r v) / (gamma (1-gamma) (1+gamma)^2)
        vg0 = gamma_var(mle.gamma0, 2.0 * n0 * (mle.u + r * mle.v), mle.gamma0_boundary);
        vg1 = vg0;
    } else {
        vg0 = gamma_var(mle.gamma0, 2.0 * n0 * mle.u, mle.gamma0_boundary);
        vg1 = gamma_var(mle.gamma1, 2.0 * n1 * mle.v, mle.gamma1_boundary);
    }

    const double g0 = mle.gamma0, g1 = mle.gamma1;
    const double u = mle.u, v = mle.v;
    const double l0 = mle.lambda0, l1 = mle.lambda1;
    const double q0 = 1.0 + g0, q1 = 1.0 + g1;

    WaldReport rep;
    rep.level = level;
    auto add = [&rep](const char* name, WaldEntry e) { rep.entries.emplace_back(name, e); };

    add("u", delta_method(u, false, z, {{&vu, 1.0}}));
    add("v", delta_method(v, false, z, {{&vv, 1.0}}));
    if (mle.model == ModelKind::reduced) {
        add("gamma", delta_method(g0, false, z, {{&vg0, 1.0}}));
    } else {
        add("gamma0", delta_method(g0, false, z, {{&vg0, 1.0}}));
        add("gamma1", delta_method(g1, false, z, {{&vg1, 1.0}}));
    }
    add("lambda0", delta_method(l0, false, z, {{&vu, 1.0 / q0}, {&vg0, -u / (q0 * q0)}}));
    add("lambda1", delta_method(l1, false, z, {{&vv, 1.0 / q1}, {&vg1, -v / (q1 * q1)}}));

    if (mle.model == ModelKind::reduced) {
        add("delta", delta_method(mle.delta, false, z,
                                  {{&vu, -1.0 / q0},
                                   {&vv, 1.0 / q0},
                                   {&vg0, -(v - u) / (q0 * q0)}}));
        add("risk_ratio",
            delta_method(mle.risk_ratio, true, z, {{&vu, -1.0 / u}, {&vv, 1.0 / v}}));
        // log psi = log v + log(1+g-u) - log u - log(1+g-v)
        add("odds_ratio", delta_method(mle.odds_ratio, true, z,
                                       {{&vu, -(1.0 / u + 1.0 / (q0 - u))},
                                        {&vv, 1.0 / v + 1.0 / (q0 - v)},
                                        {&vg0, 1.0 / (q0 - u) - 1.0 / (q0 - v)}}));
    } else {
        add("delta", delta_method(mle.delta, false, z,
                                  {{&vu, -1.0 / q0},
                                   {&vv, 1.0 / q1},
                                   {&vg0, u / (q0 * q0)},
                                   {&vg1, -v / (q1 * q1)}}));
        add("risk_ratio", delta_method(mle.risk_ratio, true, z,
                                       {{&vu, -1.0 / u},
                                        {&vv, 1.0 / v},
                                        {&vg0, 1.0 / q0},
                                        {&vg1, -1.0 / q1}}));
        const double dl1 = 1.0 / l1 + 1.0 / (1.0 - l1);   // d log psi / d lambda1
        const double dl0 = -(1.0 / l0 + 1.0 / (1.0 - l0));
        add("odds_ratio", delta_method(mle.odds_ratio, true, z,
                                       {{&vu, dl0 / q0},
                                        {&vv, dl1 / q1},
                                        {&vg0, dl0 * (-l0 / q0)},
                                        {&vg1, dl1 * (-l1 / q1)}}));
        add("delta_gamma", delta_method(g1 - g0, false, z, {{&vg0, -1.0}, {&vg1, 1.0}}));
    }
    return rep;
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p not in (0,1)");

    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double cc[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};

    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((cc[0] * q + cc[1]) * q + cc[2]) * q + cc[3]) * q + cc[4]) * q + cc[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double t = q * q;
        x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * q /
            (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((cc[0] * q + cc[1]) * q + cc[2]) * q + cc[3]) * q + cc[4]) * q + cc[5]) /
            ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
    }

    // One Halley refinement against the exact CDF.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

}  // namespace bilat
