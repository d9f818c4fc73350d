#include "bilat/summary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bilat/rng.hpp"

namespace bilat {

namespace {

double weighted_mean(const std::vector<double>& x, const std::vector<double>& w, double wsum) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
    return s / wsum;
}

double weighted_sd(const std::vector<double>& x, const std::vector<double>& w, double wsum,
                   double mean) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - mean;
        s += w[i] * d * d;
    }
    return std::sqrt(s / wsum);
}

double effective_sample_size(const std::vector<double>& w) {
    double s = 0, s2 = 0;
    for (double wi : w) {
        s += wi;
        s2 += wi * wi;
    }
    return s2 > 0 ? s * s / s2 : 0.0;
}

// Narrowest window over sorted values covering ceil(level*M) draws.
Interval chen_shao_sorted(const std::vector<double>& sorted, double level) {
    const std::size_t m = sorted.size();
    const auto span = static_cast<std::size_t>(std::ceil(level * static_cast<double>(m)));
    if (span >= m) return {sorted.front(), sorted.back()};
    std::size_t best = 0;
    double best_width = sorted[span - 1] - sorted[0];
    for (std::size_t j = 1; j + span <= m; ++j) {
        const double width = sorted[j + span - 1] - sorted[j];
        if (width < best_width) {
            best_width = width;
            best = j;
        }
    }
    return {sorted[best], sorted[best + span - 1]};
}

// Systematic resampling: M strata of the weight CDF, one index each.
std::vector<std::uint32_t> resample_indices(const std::vector<double>& w,
                                            std::uint64_t seed) {
    const std::size_t m = w.size();
    std::vector<double> cdf(m);
    std::partial_sum(w.begin(), w.end(), cdf.begin());
    const double total = cdf.back();

    rng::Stream stream(seed, "summary/hpd-resample");
    const double offset = stream.uniform();

    std::vector<std::uint32_t> idx(m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double target = total * (static_cast<double>(i) + offset) / static_cast<double>(m);
        while (k + 1 < m && cdf[k] < target) ++k;
        idx[i] = static_cast<std::uint32_t>(k);
    }
    return idx;
}

bool all_unit_weights(const std::vector<double>& w) {
    return std::all_of(w.begin(), w.end(), [](double x) { return x == 1.0; });
}

struct Column {
    std::string name;
    std::vector<double> values;
};

std::vector<Column> estimand_columns(const DrawSet& draws) {
    const std::size_t m = draws.size();
    const bool saturated = draws.model == ModelKind::saturated;
    const auto est = derive_estimands(draws);

    std::vector<Column> cols;
    cols.push_back({"u", draws.u});
    cols.push_back({"v", draws.v});
    if (saturated) {
        cols.push_back({"gamma0", draws.gamma0});
        cols.push_back({"gamma1", draws.gamma1});
    } else {
        cols.push_back({"gamma", draws.gamma0});
    }
    Column lambda0{"lambda0", std::vector<double>(m)};
    Column lambda1{"lambda1", std::vector<double>(m)};
    Column delta{"delta", std::vector<double>(m)};
    Column rr{"risk_ratio", std::vector<double>(m)};
    Column orr{"odds_ratio", std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
        const double g0 = draws.gamma0[i];
        const double g1 = saturated ? draws.gamma1[i] : g0;
        lambda0.values[i] = draws.u[i] / (1.0 + g0);
        lambda1.values[i] = draws.v[i] / (1.0 + g1);
        delta.values[i] = est[i].delta;
        rr.values[i] = est[i].risk_ratio;
        orr.values[i] = est[i].odds_ratio;
    }
    cols.push_back(std::move(lambda0));
    cols.push_back(std::move(lambda1));
    cols.push_back(std::move(delta));
    cols.push_back(std::move(rr));
    cols.push_back(std::move(orr));
    if (saturated) {
        Column ed{"excess_diff", std::vector<double>(m)};
        Column dg{"delta_gamma", std::vector<double>(m)};
        for (std::size_t i = 0; i < m; ++i) {
            ed.values[i] = est[i].excess_diff;
            dg.values[i] = est[i].delta_gamma;
        }
        cols.push_back(std::move(ed));
        cols.push_back(std::move(dg));
    }
    return cols;
}

}  // namespace

std::string TailQuery::label() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "P(%s%s%g)", estimand.c_str(), greater ? ">" : "<",
                  threshold);
    return buf;
}

const EstimandStats& PosteriorSummary::operator[](const std::string& name) const {
    for (const auto& [n, s] : stats) {
        if (n == name) return s;
    }
    throw std::out_of_range("no summary for estimand " + name);
}

Interval equal_tailed_interval(const std::vector<double>& values,
                               const std::vector<double>& weights, double level) {
    if (values.empty() || values.size() != weights.size()) {
        throw std::invalid_argument("equal_tailed_interval: bad input sizes");
    }
    if (!(level > 0 && level < 1)) throw std::invalid_argument("level must be in (0,1)");

    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });

    double total = 0;
    for (double w : weights) total += w;

    const auto quantile = [&](double q) {
        double acc = 0;
        for (std::uint32_t i : order) {
            acc += weights[i];
            if (acc >= q * total) return values[i];
        }
        return values[order.back()];
    };
    const double alpha = 1.0 - level;
    return {quantile(alpha / 2.0), quantile(1.0 - alpha / 2.0)};
}

Interval hpd_interval(const std::vector<double>& values, const std::vector<double>& weights,
                      double level, std::uint64_t resample_seed) {
    if (!(level > 0 && level < 1)) throw std::invalid_argument("level must be in (0,1)");
    if (values.empty() || values.size() != weights.size()) {
        throw std::invalid_argument("hpd_interval: bad input sizes");
    }
    if (effective_sample_size(weights) < 100.0) {
        throw std::invalid_argument("hpd_interval needs at least 100 effective draws");
    }

    std::vector<double> sorted;
    if (all_unit_weights(weights)) {
        sorted = values;
    } else {
        const auto idx = resample_indices(weights, resample_seed);
        sorted.resize(values.size());
        // Indices are produced in CDF order over the unsorted values.
        for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = values[idx[i]];
    }
    std::sort(sorted.begin(), sorted.end());
    return chen_shao_sorted(sorted, level);
}

PosteriorSummary summarize(const DrawSet& draws, double level,
                           const std::vector<TailQuery>& tails) {
    if (draws.size() == 0) throw std::invalid_argument("summarize: empty draw set");
    if (!(level > 0 && level < 1)) throw std::invalid_argument("level must be in (0,1)");

    const auto& w = draws.weight;
    double wsum = 0;
    for (double wi : w) wsum += wi;

    PosteriorSummary out;
    out.model = draws.model;
    out.level = level;
    out.draws = draws.size();
    out.requested = draws.requested;
    out.ess = effective_sample_size(w);
    out.unreliable = out.ess < 50.0;
    out.low_m_warning = draws.low_m_warning;

    const auto cols = estimand_columns(draws);

    // One resample pass shared by every weighted HPD.
    std::vector<std::uint32_t> resample;
    const bool weighted = !all_unit_weights(w);
    if (weighted && out.ess >= 100.0) resample = resample_indices(w, draws.seed);

    for (const auto& col : cols) {
        EstimandStats s;
        s.mean = weighted_mean(col.values, w, wsum);
        s.sd = weighted_sd(col.values, w, wsum, s.mean);
        s.equal_tailed = equal_tailed_interval(col.values, w, level);
        if (out.ess >= 100.0) {
            std::vector<double> sorted;
            if (weighted) {
                sorted.resize(resample.size());
                for (std::size_t i = 0; i < resample.size(); ++i) {
                    sorted[i] = col.values[resample[i]];
                }
            } else {
                sorted = col.values;
            }
            std::sort(sorted.begin(), sorted.end());
            s.hpd = chen_shao_sorted(sorted, level);
        } else {
            s.hpd = s.equal_tailed;  // too few effective draws for a window search
        }
        out.stats.emplace_back(col.name, s);
    }

    for (const auto& q : tails) {
        const auto it = std::find_if(cols.begin(), cols.end(),
                                     [&](const Column& c) { return c.name == q.estimand; });
        if (it == cols.end()) {
            throw std::invalid_argument("unknown estimand in tail query: " + q.estimand);
        }
        double s = 0;
        for (std::size_t i = 0; i < it->values.size(); ++i) {
            const bool in = q.greater ? it->values[i] > q.threshold : it->values[i] < q.threshold;
            if (in) s += w[i];
        }
        out.tail_probs.emplace_back(q.label(), s / wsum);
    }
    return out;
}

DicResult dic(const DrawSet& draws, const BilateralTable& table) {
    if (draws.size() == 0) throw std::invalid_argument("dic: empty draw set");
    const auto cells = table.cells();
    const auto& w = draws.weight;
    const bool saturated = draws.model == ModelKind::saturated;

    double wsum = 0;
    for (double wi : w) wsum += wi;

    double dbar = 0, g0bar = 0, g1bar = 0, ubar = 0, vbar = 0;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double g0 = draws.gamma0[i];
        const double g1 = saturated ? draws.gamma1[i] : g0;
        const double ll =
            log_likelihood_saturated(SaturatedUVParams{g0, g1, draws.u[i], draws.v[i]}, cells);
        dbar += w[i] * (-2.0 * ll);
        g0bar += w[i] * g0;
        g1bar += w[i] * g1;
        ubar += w[i] * draws.u[i];
        vbar += w[i] * draws.v[i];
    }
    dbar /= wsum;
    g0bar /= wsum;
    g1bar /= wsum;
    ubar /= wsum;
    vbar /= wsum;

    const double d_at_mean = -2.0 * log_likelihood_saturated(
                                        SaturatedUVParams{g0bar, saturated ? g1bar : g0bar,
                                                          ubar, vbar},
                                        cells);
    DicResult out;
    out.pd = dbar - d_at_mean;
    out.dic = dbar + out.pd;
    return out;
}

}  // namespace bilat
