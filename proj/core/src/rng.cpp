#include "bilat/rng.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bilat/bayes_factor.hpp"  // log_beta

namespace bilat::rng {

std::uint64_t substream_seed(std::uint64_t seed, std::string_view label) {
    // FNV-1a over the label bytes, offset by the root seed.
    std::uint64_t h = 14695981039346656037ULL ^ seed;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    // splitmix64 finalizer to decorrelate nearby seeds/labels.
    h += 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    return h ^ (h >> 31);
}

Stream::Stream(std::uint64_t seed, std::string_view label)
    : engine_(substream_seed(seed, label)) {}

double Stream::uniform() {
    for (;;) {
        const double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        if (x > 0.0 && x < 1.0) return x;
    }
}

double Stream::normal() {
    if (have_spare_normal_) {
        have_spare_normal_ = false;
        return spare_normal_;
    }
    for (;;) {
        const double a = 2.0 * uniform() - 1.0;
        const double b = 2.0 * uniform() - 1.0;
        const double s = a * a + b * b;
        if (s >= 1.0 || s == 0.0) continue;
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_normal_ = b * f;
        have_spare_normal_ = true;
        return a * f;
    }
}

double Stream::gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
    if (shape < 1.0) {
        // Boost to shape+1 and scale back by U^(1/shape).
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, t;
        do {
            x = normal();
            t = 1.0 + c * x;
        } while (t <= 0.0);
        const double w = t * t * t;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * w;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - w + std::log(w))) return d * w;
    }
}

double Stream::beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("beta shape parameters must be positive");
    }
    for (;;) {
        const double x = gamma(a);
        const double y = gamma(b);
        const double z = x / (x + y);
        // Condition on the open interval; extreme shape ratios can round to
        // an endpoint.
        if (z > 0.0 && z < 1.0) return z;
    }
}

double gamma_law_sample(Stream& stream, const GammaLawParams& params, GammaLawMethod method) {
    if (!(params.mu > 0.0) || !(params.nu > 0.0)) {
        throw std::invalid_argument("gamma-law parameters must be positive");
    }
    if (method == GammaLawMethod::transform_a2) {
        const double pi = stream.beta(params.nu, params.mu);
        return (1.0 - pi) / (1.0 + pi);
    }
    // A1: logit(gamma) = logit(p) - log 2, i.e. gamma = p / (2 - p).
    const double p = stream.beta(params.mu, params.nu);
    return p / (2.0 - p);
}

double gamma_law_density(const GammaLawParams& params, double gamma) {
    if (!(params.mu > 0.0) || !(params.nu > 0.0)) {
        throw std::invalid_argument("gamma-law parameters must be positive");
    }
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::invalid_argument("gamma_law_density: gamma must lie in (0,1)");
    }
    const double lp = params.mu * std::log(2.0) - log_beta(params.mu, params.nu) +
                      (params.mu - 1.0) * std::log(gamma) +
                      (params.nu - 1.0) * std::log1p(-gamma) -
                      (params.mu + params.nu) * std::log1p(gamma);
    return std::exp(lp);
}

double gamma_law_mode(const GammaLawParams& params) {
    if (!(params.mu > 1.0) || !(params.nu > 1.0)) {
        throw std::invalid_argument("gamma_law_mode requires mu, nu > 1");
    }
    const double s = 2.0 * params.nu + params.mu - 1.0;
    const double lam = s * s - 8.0 * (params.mu - 1.0);
    return 2.0 * (params.mu - 1.0) / (s + std::sqrt(lam));
}

std::array<std::int64_t, 3> trinomial_sample(Stream& stream, std::int64_t n,
                                             const std::array<double, 3>& p) {
    if (n < 0) throw std::invalid_argument("trinomial_sample: n must be >= 0");
    const double total = p[0] + p[1] + p[2];
    if (!(p[0] >= 0.0 && p[1] >= 0.0 && p[2] >= 0.0) || std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("trinomial_sample: invalid probability vector");
    }

    // Binomial by inversion: walk the pmf from k = 0. Batches of more than
    // 500 trials are split into independent halves so the starting pmf
    // q^trials stays representable.
    const std::function<std::int64_t(std::int64_t, double)> binomial =
        [&stream, &binomial](std::int64_t trials, double prob) -> std::int64_t {
        if (trials == 0 || prob <= 0.0) return 0;
        if (prob >= 1.0) return trials;
        if (prob > 0.5) return trials - binomial(trials, 1.0 - prob);
        if (trials > 500) {
            const std::int64_t half = trials / 2;
            return binomial(half, prob) + binomial(trials - half, prob);
        }
        const double u = stream.uniform();
        const double q = 1.0 - prob;
        double pmf = std::pow(q, static_cast<double>(trials));
        double cdf = pmf;
        std::int64_t k = 0;
        while (u > cdf && k < trials) {
            pmf *= (static_cast<double>(trials - k) / static_cast<double>(k + 1)) * (prob / q);
            ++k;
            cdf += pmf;
        }
        return k;
    };

    std::array<std::int64_t, 3> out{0, 0, 0};
    out[0] = binomial(n, p[0] / total);
    const double rest = p[1] + p[2];
    out[1] = rest > 0.0 ? binomial(n - out[0], p[1] / rest) : n - out[0];
    out[2] = n - out[0] - out[1];
    return out;
}

}  // namespace bilat::rng
