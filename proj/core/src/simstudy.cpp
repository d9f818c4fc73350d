#include "bilat/simstudy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "bilat/mle.hpp"
#include "bilat/model.hpp"
#include "bilat/posterior.hpp"
#include "bilat/rng.hpp"
#include "bilat/summary.hpp"

namespace bilat::sim {

namespace {

PriorKind prior_of(Method method) {
    switch (method) {
        case Method::hpd_uniform: return PriorKind::uniform;
        case Method::hpd_jeffreys: return PriorKind::jeffreys;
        case Method::hpd_reference: return PriorKind::reference;
        case Method::wald: break;
    }
    throw std::logic_error("no prior for the wald method");
}

// True parameter values in tally order (delta, gamma, lambda0, lambda1).
std::array<double, 4> truth(const GridPoint& p) {
    return {p.lambda1 - p.lambda0, p.gamma, p.lambda0, p.lambda1};
}

}  // namespace

std::vector<GridPoint> build_grid(double delta_h, int group_size) {
    if (!(delta_h >= 0.0 && delta_h <= 0.9)) {
        throw std::invalid_argument("build_grid: delta must lie in [0, 0.9]");
    }
    if (group_size < 2) throw std::invalid_argument("build_grid: group size must be >= 2");

    const double gamma_max =
        delta_h == 0.0 ? 1.0 : std::min(1.0, 1.0 / delta_h - 1.0);
    std::vector<GridPoint> grid;
    grid.reserve(81);
    for (int j = 1; j <= 9; ++j) {
        const double gamma = j * gamma_max / 10.0;
        const double lambda_max = 1.0 / (1.0 + gamma) - delta_h;
        for (int k = 1; k <= 9; ++k) {
            GridPoint p;
            p.delta_h = delta_h;
            p.gamma = gamma;
            p.lambda0 = k * lambda_max / 10.0;
            p.lambda1 = p.lambda0 + delta_h;
            p.group_size = group_size;
            grid.push_back(p);
        }
    }
    return grid;
}

std::string to_string(Method method) {
    switch (method) {
        case Method::wald: return "wald";
        case Method::hpd_uniform: return "hpd-uniform";
        case Method::hpd_jeffreys: return "hpd-jeffreys";
        case Method::hpd_reference: return "hpd-reference";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "wald") return Method::wald;
    if (name == "hpd-uniform") return Method::hpd_uniform;
    if (name == "hpd-jeffreys") return Method::hpd_jeffreys;
    if (name == "hpd-reference") return Method::hpd_reference;
    throw std::invalid_argument("unknown simstudy method: " + name);
}

double CriteriaSummary::global_mse(std::size_t method_index) const {
    const auto& t = tallies.at(method_index);
    return t[1].mse() + t[2].mse() + t[3].mse();  // gamma + lambda0 + lambda1
}

CriteriaSummary run_cell(const GridPoint& point, std::size_t n_rep, double level,
                         const std::vector<Method>& methods, std::size_t m_bayes,
                         std::uint64_t seed) {
    ReducedParams truth_params{point.gamma, point.lambda0, point.lambda1};
    if (!in_omega(truth_params)) {
        throw std::invalid_argument("run_cell: grid point outside the parameter space");
    }
    const auto probs0 = trinomial_probs(point.gamma, point.lambda0);
    const auto probs1 = trinomial_probs(point.gamma, point.lambda1);
    const auto target = truth(point);

    CriteriaSummary out;
    out.point = point;
    out.level = level;
    out.n_rep = n_rep;
    out.methods = methods;
    out.tallies.assign(methods.size(), {});
    out.excluded.assign(methods.size(), 0);

    for (std::size_t rep = 0; rep < n_rep; ++rep) {
        const std::uint64_t rep_seed =
            rng::substream_seed(seed, "sim/rep/" + std::to_string(rep));
        rng::Stream data(rep_seed, "sim/data");
        const auto c0 = rng::trinomial_sample(data, point.group_size, probs0);
        const auto c1 = rng::trinomial_sample(data, point.group_size, probs1);
        const auto table = validate_table(GroupCounts{c0[0], c0[1], c0[2]},
                                          GroupCounts{c1[0], c1[1], c1[2]});

        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            const Method method = methods[mi];
            if (method == Method::wald) {
                const auto fit = mle_reduced(table, Adjustment::none);
                const auto wald = wald_intervals(fit, level);
                const std::array<const char*, 4> names = {"delta", "gamma", "lambda0",
                                                          "lambda1"};
                bool degenerate = false;
                for (const char* name : names) {
                    const auto& e = wald[name];
                    if (!e.available || !(e.sd > 0.0)) degenerate = true;
                }
                if (degenerate) {
                    ++out.excluded[mi];
                    continue;
                }
                for (int pi = 0; pi < 4; ++pi) {
                    const auto& e = wald[names[pi]];
                    Tally& t = out.tallies[mi][pi];
                    ++t.counted;
                    if (e.lo <= target[pi] && target[pi] <= e.hi) ++t.covered;
                    t.width_sum += e.hi - e.lo;
                    const double err = e.estimate - target[pi];
                    t.sqerr_sum += err * err;
                }
            } else {
                const auto prior = make_prior(prior_of(method), table.ratio());
                const auto draws =
                    sample_reduced(table, prior, m_bayes,
                                   rng::substream_seed(rep_seed, to_string(method)));
                const auto summary = summarize(draws, level);
                const std::array<const char*, 4> names = {"delta", "gamma", "lambda0",
                                                          "lambda1"};
                for (int pi = 0; pi < 4; ++pi) {
                    const auto& s = summary[names[pi]];
                    Tally& t = out.tallies[mi][pi];
                    ++t.counted;
                    if (s.hpd.lo <= target[pi] && target[pi] <= s.hpd.hi) ++t.covered;
                    t.width_sum += s.hpd.width();
                    const double err = s.mean - target[pi];
                    t.sqerr_sum += err * err;
                }
            }
        }
    }
    return out;
}

std::vector<CriteriaSummary> run_grid(const std::vector<GridPoint>& grid, std::size_t n_rep,
                                      double level, const std::vector<Method>& methods,
                                      std::size_t m_bayes, std::uint64_t seed,
                                      unsigned threads) {
    std::vector<CriteriaSummary> out(grid.size());
    // Cells are independently seeded, so the work split cannot change results.
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            out[i] = run_cell(grid[i], n_rep, level, methods, m_bayes,
                              rng::substream_seed(seed, "sim/cell/" + std::to_string(i)));
        }
    };
    const unsigned n_workers =
        std::max(1u, std::min<unsigned>(threads, std::thread::hardware_concurrency()));
    if (n_workers == 1 || grid.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

CoverageReport coverage_report(const std::vector<CriteriaSummary>& summaries, double nominal) {
    if (summaries.empty()) throw std::invalid_argument("coverage_report: empty summary set");
    const auto& methods = summaries.front().methods;

    CoverageReport rep;
    rep.nominal = nominal;
    rep.cells = summaries.size();
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        for (int pi = 0; pi < 4; ++pi) {
            CoverageReportRow row;
            row.method = methods[mi];
            row.parameter = kParameters[pi];
            std::size_t within = 0, above = 0, counted = 0;
            for (const auto& s : summaries) {
                if (s.methods != methods) {
                    throw std::invalid_argument("coverage_report: inconsistent method sets");
                }
                const Tally& t = s.tallies[mi][pi];
                if (t.counted == 0) continue;
                ++counted;
                const double cov = t.coverage();
                if (std::abs(cov - nominal) <= 0.01) ++within;
                if (cov >= nominal - 0.02) ++above;
            }
            row.prop_within_001 = counted ? static_cast<double>(within) / counted : 0.0;
            row.prop_above_minus002 = counted ? static_cast<double>(above) / counted : 0.0;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

std::string CoverageReport::formatted() const {
    std::string s;
    char buf[160];
    std::snprintf(buf, sizeof buf, "coverage proportions vs nominal %.3f over %zu cells\n",
                  nominal, cells);
    s += buf;
    std::snprintf(buf, sizeof buf, "%-14s %-9s %-12s %-12s\n", "method", "parameter",
                  "within0.01", "above-0.02");
    s += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-14s %-9s %-12.4f %-12.4f\n",
                      to_string(r.method).c_str(), r.parameter.c_str(), r.prop_within_001,
                      r.prop_above_minus002);
        s += buf;
    }
    return s;
}

std::string criteria_csv(const std::vector<CriteriaSummary>& summaries) {
    std::string s =
        "delta,gamma,lambda0,lambda1,m,n_rep,level,method,parameter,coverage,mean_width,mse,"
        "global_mse,excluded\n";
    char buf[320];
    for (const auto& cell : summaries) {
        for (std::size_t mi = 0; mi < cell.methods.size(); ++mi) {
            for (int pi = 0; pi < 4; ++pi) {
                const Tally& t = cell.tallies[mi][pi];
                std::snprintf(buf, sizeof buf,
                              "%.6g,%.6g,%.6g,%.6g,%d,%zu,%.6g,%s,%s,%.6g,%.6g,%.8g,%.8g,%lld\n",
                              cell.point.delta_h, cell.point.gamma, cell.point.lambda0,
                              cell.point.lambda1, cell.point.group_size, cell.n_rep, cell.level,
                              to_string(cell.methods[mi]).c_str(), kParameters[pi],
                              t.coverage(), t.mean_width(), t.mse(), cell.global_mse(mi),
                              static_cast<long long>(cell.excluded[mi]));
                s += buf;
            }
        }
    }
    return s;
}

}  // namespace bilat::sim
