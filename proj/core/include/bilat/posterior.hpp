#pragma once

#include <cstdint>
#include <vector>

#include "bilat/model.hpp"
#include "bilat/prior.hpp"
#include "bilat/table.hpp"

namespace bilat {

enum class Scheme { direct, rejection, importance };

/// A set of joint posterior draws on the sampling cube, column-wise.
/// gamma0 holds the single gamma for the reduced model; gamma1 is used only
/// by the saturated model. Weights are identically 1 for the direct and
/// rejection schemes and (u + r v)^d under importance sampling.
struct DrawSet {
    ModelKind model = ModelKind::reduced;
    PriorSpec prior;
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    Scheme scheme = Scheme::direct;
    double acceptance_rate = 1.0;
    bool low_m_warning = false;  // requested M below 1000
    bool weighted = false;

    std::vector<double> gamma0;
    std::vector<double> gamma1;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> weight;

    std::size_t size() const { return u.size(); }
    const std::vector<double>& gamma() const { return gamma0; }
};

/// Posterior sampler for the reduced model. The direct scheme requires an
/// untilted prior (d = 0: uniform, reference, untilted custom); rejection and
/// importance require the tilted Jeffreys family (d > 0). A scheme/prior
/// mismatch is rejected with an explanation.
DrawSet sample_reduced(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                       std::uint64_t seed, Scheme scheme);

/// Convenience overload picking the default scheme for the prior:
/// importance when tilted, direct otherwise.
DrawSet sample_reduced(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                       std::uint64_t seed);

/// Posterior sampler for the saturated model. All four components are
/// independent and unweighted; the named priors map to the saturated
/// hyperparameters (Jeffreys: a_i = 1, b_i = 1/2; reference: all 1/2;
/// uniform: all 1). Tilted custom priors are rejected.
DrawSet sample_saturated(const BilateralTable& table, const PriorSpec& prior, std::size_t m,
                         std::uint64_t seed);

/// Element-wise estimand transform of a draw set.
std::vector<Estimands> derive_estimands(const DrawSet& draws);

}  // namespace bilat
