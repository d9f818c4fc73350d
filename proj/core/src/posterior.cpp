#include "bilat/posterior.hpp"

#include <cmath>
#include <stdexcept>

#include "bilat/rng.hpp"

namespace bilat {

namespace {

constexpr std::size_t kLowM = 1000;

struct SaturatedShapes {
    double alpha, beta, a0, b0, a1, b1;
};

// Saturated-model hyperparameters for a reduced-family spec. The gamma factor
// carries over per group; the (u, v) shapes follow the saturated-alternative
// prior family: Be(a_i, 1/2) with a_i = 1 under Jeffreys.
SaturatedShapes saturated_shapes(const PriorSpec& prior) {
    switch (prior.kind) {
        case PriorKind::uniform:
            return {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
        case PriorKind::jeffreys:
            return {0.5, 0.5, 1.0, 0.5, 1.0, 0.5};
        case PriorKind::reference:
            return {0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
        case PriorKind::custom:
            if (prior.tilted()) {
                throw std::invalid_argument(
                    "saturated sampler: tilted custom priors are not part of the saturated family");
            }
            return {prior.alpha, prior.beta, prior.a0, prior.b0, prior.a1, prior.b1};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

DrawSet sample_reduced(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                       std::uint64_t seed) {
    return sample_reduced(table, prior, m, seed,
                          prior.tilted() ? Scheme::importance : Scheme::direct);
}

DrawSet sample_reduced(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                       std::uint64_t seed, Scheme scheme) {
    if (m == 0) throw std::invalid_argument("sample_reduced: M must be >= 1");
    if (scheme == Scheme::direct && prior.tilted()) {
        throw std::invalid_argument(
            "direct sampling requires an untilted prior (d = 0); use the rejection or "
            "importance scheme for the Jeffreys family");
    }
    if (scheme != Scheme::direct && !prior.tilted()) {
        throw std::invalid_argument(
            "rejection/importance schemes correct for the (u+rv)^d tilt; the given prior has "
            "d = 0, use the direct scheme");
    }

    const double r = table.ratio();
    const rng::GammaLawParams glaw{table.m_1plus() + prior.alpha, table.m_2plus() + prior.beta};
    const double au = table.m10 + table.m20 + prior.a0;
    const double bu = table.m00 + prior.b0;
    const double av = table.m11 + table.m21 + prior.a1;
    const double bv = table.m01 + prior.b1;

    rng::Stream sg(seed, "posterior/gamma");
    rng::Stream su(seed, "posterior/u");
    rng::Stream sv(seed, "posterior/v");
    rng::Stream sxi(seed, "posterior/xi");

    DrawSet out;
    out.model = ModelKind::reduced;
    out.prior = prior;
    out.seed = seed;
    out.requested = m;
    out.scheme = scheme;
    out.low_m_warning = m < kLowM;
    out.weighted = scheme == Scheme::importance;

    out.u.reserve(m);
    out.v.reserve(m);
    out.gamma0.reserve(m);
    out.weight.reserve(m);

    std::size_t accepted = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double g = rng::gamma_law_sample(sg, glaw);
        const double u = su.beta(au, bu);
        const double v = sv.beta(av, bv);
        switch (scheme) {
            case Scheme::direct:
                out.gamma0.push_back(g);
                out.u.push_back(u);
                out.v.push_back(v);
                out.weight.push_back(1.0);
                ++accepted;
                break;
            case Scheme::importance: {
                out.gamma0.push_back(g);
                out.u.push_back(u);
                out.v.push_back(v);
                out.weight.push_back(std::pow(u + r * v, prior.d));
                ++accepted;
                break;
            }
            case Scheme::rejection: {
                const double w = std::pow(u + r * v, prior.d);
                if (sxi.uniform() < w / (1.0 + r)) {
                    out.gamma0.push_back(g);
                    out.u.push_back(u);
                    out.v.push_back(v);
                    out.weight.push_back(1.0);
                    ++accepted;
                }
                break;
            }
        }
    }
    out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(m);
    return out;
}

DrawSet sample_saturated(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                         std::uint64_t seed) {
    if (m == 0) throw std::invalid_argument("sample_saturated: M must be >= 1");
    const auto s = saturated_shapes(prior);

    const rng::GammaLawParams glaw0{table.m10 + s.alpha, table.m20 + s.beta};
    const rng::GammaLawParams glaw1{table.m11 + s.alpha, table.m21 + s.beta};
    const double au = table.m10 + table.m20 + s.a0;
    const double bu = table.m00 + s.b0;
    const double av = table.m11 + table.m21 + s.a1;
    const double bv = table.m01 + s.b1;

    rng::Stream sg0(seed, "posterior/gamma0");
    rng::Stream sg1(seed, "posterior/gamma1");
    rng::Stream su(seed, "posterior/u");
    rng::Stream sv(seed, "posterior/v");

    DrawSet out;
    out.model = ModelKind::saturated;
    out.prior = prior;
    out.seed = seed;
    out.requested = m;
    out.scheme = Scheme::direct;
    out.low_m_warning = m < kLowM;

    out.gamma0.resize(m);
    out.gamma1.resize(m);
    out.u.resize(m);
    out.v.resize(m);
    out.weight.assign(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        out.gamma0[i] = rng::gamma_law_sample(sg0, glaw0);
        out.gamma1[i] = rng::gamma_law_sample(sg1, glaw1);
        out.u[i] = su.beta(au, bu);
        out.v[i] = sv.beta(av, bv);
    }
    return out;
}

std::vector<Estimands> derive_estimands(const DrawSet& draws) {
    if (draws.size() == 0) throw std::invalid_argument("derive_estimands: empty draw set");
    std::vector<Estimands> out(draws.size());
    const bool saturated = draws.model == ModelKind::saturated;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double g0 = draws.gamma0[i];
        const double g1 = saturated ? draws.gamma1[i] : g0;
        out[i] = estimands_from(SaturatedUVParams{g0, g1, draws.u[i], draws.v[i]});
    }
    return out;
}

}  // namespace bilat
