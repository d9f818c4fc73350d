#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace bilat::rng {

/// Derives a substream seed from a root seed and a label. Same (seed, label)
/// always yields the same substream, so adding draws of one quantity never
/// perturbs another.
std::uint64_t substream_seed(std::uint64_t seed, std::string_view label);

/// Deterministic variate stream. All distributions are implemented on top of
/// the (fully specified) mt19937_64 engine rather than the standard library's
/// implementation-defined distribution objects, so a given (seed, label, draw
/// index) produces the same variate on every platform and thread count.
class Stream {
  public:
    Stream(std::uint64_t seed, std::string_view label);

    /// Uniform on the open interval (0,1), 53-bit resolution.
    double uniform();

    /// Standard normal (Marsaglia polar method).
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape > 0.
    double gamma(double shape);

    /// Beta(a, b) via the two-gamma ratio, conditioned on the open interval.
    double beta(double a, double b);

  private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool have_spare_normal_ = false;
};

/// Parameters of the gamma law f(g; mu, nu) = 2^mu / B(mu,nu) *
/// g^(mu-1) (1-g)^(nu-1) / (1+g)^(mu+nu) on (0,1), the conjugate family of
/// the nuisance-parameter posterior.
struct GammaLawParams {
    double mu = 1;
    double nu = 1;
};

enum class GammaLawMethod {
    transform_a1,  // p ~ Be(mu,nu); gamma = logistic(logit(p) - log 2)
    transform_a2,  // pi ~ Be(nu,mu); gamma = (1-pi)/(1+pi)   (default)
};

/// Draw from f(g; mu, nu). Both transforms target the law exactly; A2 is the
/// default (a single Beta draw, no logit overflow near gamma -> 0).
double gamma_law_sample(Stream& stream, const GammaLawParams& params,
                        GammaLawMethod method = GammaLawMethod::transform_a2);

/// Normalized density of f(g; mu, nu); rejects gamma outside (0,1).
double gamma_law_density(const GammaLawParams& params, double gamma);

/// Mode of f(g; mu, nu) for mu, nu > 1:
/// 2(mu-1) / (2 nu + mu - 1 + sqrt((2 nu + mu - 1)^2 - 8(mu-1))).
double gamma_law_mode(const GammaLawParams& params);

/// Trinomial draw by sequential binomial conditioning; probabilities must be
/// non-negative and sum to 1 within 1e-9.
std::array<std::int64_t, 3> trinomial_sample(Stream& stream, std::int64_t n,
                                             const std::array<double, 3>& p);

}  // namespace bilat::rng
