// Test-only reference implementations, independent of the library code they
// check: Beta special functions and quadrature from boost::math, KS test
// machinery, and the closed-form posterior integrals used as sampler oracles.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>

namespace oracle {

inline double beta_pdf(double x, double a, double b) {
    return boost::math::ibeta_derivative(a, b, x);
}

inline double beta_cdf(double x, double a, double b) { return boost::math::ibeta(a, b, x); }

// CDF of the gamma law f(g; mu, nu) through the monotone decreasing map
// pi = (1-g)/(1+g), pi ~ Be(nu, mu).
inline double gamma_law_cdf(double g, double mu, double nu) {
    const double pi = (1.0 - g) / (1.0 + g);
    return boost::math::ibetac(nu, mu, pi);
}

template <typename F>
double integrate01(F&& f, double tol = 1e-10) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        std::forward<F>(f), 0.0, 1.0, 12, tol);
}

template <typename F>
double integrate(F&& f, double lo, double hi, double tol = 1e-10) {
    if (!(lo < hi)) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        std::forward<F>(f), lo, hi, 12, tol);
}

// E[(u + r v)^d * 1{v > r0 u}] with u ~ Be(au,bu), v ~ Be(av,bv) independent.
// The Prop. A.4 posterior tail P(R > r0 | D) is this divided by its r0 = 0
// value.
inline double tilted_tail(double r0, double d, double au, double bu, double av, double bv,
                          double r) {
    auto outer = [&](double u) {
        const double lo = std::min(1.0, r0 * u);
        auto inner = [&](double v) {
            const double tilt = d == 0.0 ? 1.0 : std::pow(u + r * v, d);
            return tilt * beta_pdf(v, av, bv);
        };
        return integrate(inner, lo, 1.0, 1e-11) * beta_pdf(u, au, bu);
    };
    return integrate01(outer, 1e-9);
}

inline double prob_risk_ratio_above(double r0, double d, double au, double bu, double av,
                                    double bv, double r) {
    const double denom = tilted_tail(0.0, d, au, bu, av, bv, r);
    return tilted_tail(r0, d, au, bu, av, bv, r) / denom;
}

// Kolmogorov distribution tail Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 l^2).
inline double kolmogorov_q(double lambda) {
    if (lambda < 1e-8) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

// One-sample KS statistic against a CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

// Asymptotic one-sample KS critical value at significance alpha.
inline double ks_critical(double alpha, std::size_t n) {
    const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
    return c / std::sqrt(static_cast<double>(n));
}

// Two-sample KS p-value (asymptotic, with the usual small-sample correction).
inline double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    const double ne = std::sqrt(na * nb / (na + nb));
    return kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
}

inline double chi_squared_quantile(double p, double dof) {
    return boost::math::quantile(boost::math::chi_squared(dof), p);
}

inline double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace oracle
