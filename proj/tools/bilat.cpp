// bilat: objective Bayesian and frequentist inference for 3x2 bilateral
// contingency tables. Subcommands: analyze, bf, mle, sample, simstudy.
//
// Exit codes: 0 ok (warnings allowed), 1 statistical refusal (e.g. Wald
// intervals unavailable at a boundary MLE), 2 input/usage error.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bilat/bayes_factor.hpp"
#include "bilat/mle.hpp"
#include "bilat/posterior.hpp"
#include "bilat/prior.hpp"
#include "bilat/simstudy.hpp"
#include "bilat/summary.hpp"
#include "bilat/table.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefusal = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// ---------------------------------------------------------------- table I/O

bilat::GroupCounts parse_group(const json& j, const std::string& name) {
    if (!j.contains(name)) throw InputError("missing field \"" + name + "\"");
    const auto& a = j.at(name);
    if (!a.is_array() || a.size() != 3) {
        throw InputError("field \"" + name + "\" must be an array of three counts");
    }
    bilat::GroupCounts g;
    std::int64_t* slots[3] = {&g.cured0, &g.cured1, &g.cured2};
    for (int i = 0; i < 3; ++i) {
        if (!a[i].is_number_integer()) {
            throw InputError("field \"" + name + "[" + std::to_string(i) +
                             "]\" must be an integer");
        }
        *slots[i] = a[i].get<std::int64_t>();
    }
    return g;
}

bilat::BilateralTable load_table_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open table file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return bilat::validate_table(parse_group(j, "control"), parse_group(j, "treatment"));
}

bilat::BilateralTable load_table_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open table file: " + path);
    std::string line;
    if (!std::getline(in, line) || line.find("group") != 0) {
        throw InputError(path + ":1: expected header \"group,cured0,cured1,cured2\"");
    }
    std::optional<bilat::GroupCounts> control, treatment;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string name, c0, c1, c2;
        if (!std::getline(ss, name, ',') || !std::getline(ss, c0, ',') ||
            !std::getline(ss, c1, ',') || !std::getline(ss, c2)) {
            throw InputError(path + ":" + std::to_string(lineno) + ": expected 4 fields");
        }
        bilat::GroupCounts g;
        try {
            g.cured0 = std::stoll(c0);
            g.cured1 = std::stoll(c1);
            g.cured2 = std::stoll(c2);
        } catch (const std::exception&) {
            throw InputError(path + ":" + std::to_string(lineno) + ": non-integer count");
        }
        if (name == "control") control = g;
        else if (name == "treatment") treatment = g;
        else throw InputError(path + ":" + std::to_string(lineno) + ": unknown group \"" + name + "\"");
    }
    if (!control) throw InputError(path + ": missing control row");
    if (!treatment) throw InputError(path + ": missing treatment row");
    return bilat::validate_table(*control, *treatment);
}

bilat::BilateralTable load_table(const std::string& path) {
    try {
        if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
            return load_table_csv(path);
        }
        return load_table_json(path);
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

json table_json(const bilat::BilateralTable& t) {
    return json{{"control", {t.m00, t.m10, t.m20}}, {"treatment", {t.m01, t.m11, t.m21}}};
}

// ------------------------------------------------------------ shared options

struct CommonOpts {
    std::string table_path;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
};

void add_format_option(CLI::App* cmd, std::string& format) {
    const char* env = std::getenv("BILAT_FORMAT");
    if (env != nullptr) format = env;
    cmd->add_option("--format", format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    if (isatty(STDIN_FILENO)) {
        std::cerr << "note: --seed not given; defaulting to 0\n";
        return 0;
    }
    throw InputError("--seed is required in non-interactive use");
}

bilat::PriorSpec build_prior(const std::string& kind, const std::vector<double>& shapes,
                             const bilat::BilateralTable& table) {
    const auto k = bilat::prior_kind_from_string(kind);
    if (k == bilat::PriorKind::custom) {
        if (shapes.size() != 7) {
            throw InputError(
                "--shapes alpha,beta,a0,b0,a1,b1,d is required for the custom prior");
        }
        return bilat::custom_prior(shapes[0], shapes[1], shapes[2], shapes[3], shapes[4],
                                   shapes[5], shapes[6], table.ratio());
    }
    return bilat::make_prior(k, table.ratio());
}

std::vector<bilat::TailQuery> parse_tails(const std::vector<std::string>& specs,
                                          bilat::ModelKind model) {
    std::vector<bilat::TailQuery> out;
    if (specs.empty()) {
        out.push_back({"delta", true, 0.0});
        out.push_back({"delta", false, 0.0});
        if (model == bilat::ModelKind::saturated) out.push_back({"delta_gamma", false, 0.0});
        return out;
    }
    for (const auto& s : specs) {
        const auto pos = s.find_first_of("<>");
        if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size()) {
            throw InputError("bad tail query \"" + s + "\"; use e.g. delta>0");
        }
        bilat::TailQuery q;
        q.estimand = s.substr(0, pos);
        q.greater = s[pos] == '>';
        try {
            q.threshold = std::stod(s.substr(pos + 1));
        } catch (const std::exception&) {
            throw InputError("bad threshold in tail query \"" + s + "\"");
        }
        out.push_back(q);
    }
    return out;
}

// ----------------------------------------------------------------- rendering

json summary_json(const bilat::PosteriorSummary& s) {
    json est = json::object();
    for (const auto& [name, st] : s.stats) {
        est[name] = {{"mean", st.mean},
                     {"sd", st.sd},
                     {"equal_tailed", {st.equal_tailed.lo, st.equal_tailed.hi}},
                     {"hpd", {st.hpd.lo, st.hpd.hi}}};
    }
    json tails = json::object();
    for (const auto& [label, p] : s.tail_probs) tails[label] = p;
    return json{{"level", s.level},       {"draws", s.draws},
                {"requested", s.requested}, {"ess", s.ess},
                {"estimands", est},       {"tail_probabilities", tails}};
}

void print_summary_text(std::ostream& os, const bilat::PosteriorSummary& s) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-12s %10s %10s %10s %10s %10s %10s\n", "estimand", "mean",
                  "sd", "et_lo", "et_hi", "hpd_lo", "hpd_hi");
    os << buf;
    for (const auto& [name, st] : s.stats) {
        std::snprintf(buf, sizeof buf, "%-12s %10.4f %10.4f %10.4f %10.4f %10.4f %10.4f\n",
                      name.c_str(), st.mean, st.sd, st.equal_tailed.lo, st.equal_tailed.hi,
                      st.hpd.lo, st.hpd.hi);
        os << buf;
    }
    for (const auto& [label, p] : s.tail_probs) {
        os << label << " = " << fmt("%.4f", p) << "\n";
    }
}

void print_summary_csv(std::ostream& os, const bilat::PosteriorSummary& s) {
    os << "estimand,mean,sd,et_lo,et_hi,hpd_lo,hpd_hi\n";
    char buf[240];
    for (const auto& [name, st] : s.stats) {
        std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", name.c_str(),
                      st.mean, st.sd, st.equal_tailed.lo, st.equal_tailed.hi, st.hpd.lo,
                      st.hpd.hi);
        os << buf;
    }
}

// ---------------------------------------------------------------- subcommands

struct AnalyzeOpts : CommonOpts {
    std::string model = "reduced";
    std::string prior = "reference";
    std::string scheme = "auto";
    std::vector<double> shapes;
    std::size_t draws = 100000;
    double level = 0.95;
    std::vector<std::string> tails;
};

int run_analyze(const AnalyzeOpts& opt) {
    const auto table = load_table(opt.table_path);
    const auto prior = build_prior(opt.prior, opt.shapes, table);
    const auto seed = require_seed(opt.seed);
    const bool saturated = opt.model == "saturated";

    bilat::DrawSet draws;
    if (saturated) {
        if (opt.scheme != "auto") throw InputError("--scheme applies to the reduced model only");
        draws = bilat::sample_saturated(table, prior, opt.draws, seed);
    } else if (opt.scheme == "auto") {
        draws = bilat::sample_reduced(table, prior, opt.draws, seed);
    } else {
        bilat::Scheme scheme;
        if (opt.scheme == "direct") scheme = bilat::Scheme::direct;
        else if (opt.scheme == "rejection") scheme = bilat::Scheme::rejection;
        else if (opt.scheme == "importance") scheme = bilat::Scheme::importance;
        else throw InputError("unknown scheme: " + opt.scheme);
        try {
            draws = bilat::sample_reduced(table, prior, opt.draws, seed, scheme);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    const auto tails = parse_tails(opt.tails, draws.model);
    const auto summary = bilat::summarize(draws, opt.level, tails);
    const auto ic = bilat::dic(draws, table);

    std::vector<std::string> warnings;
    if (summary.low_m_warning) warnings.push_back("draw count below 1000");
    if (summary.unreliable) warnings.push_back("effective sample size below 50");

    if (opt.format == "json") {
        json out;
        out["command"] = "analyze";
        out["table"] = table_json(table);
        out["model"] = saturated ? "saturated" : "reduced";
        out["prior"] = bilat::to_string(prior.kind);
        out["seed"] = seed;
        out["scheme"] = draws.scheme == bilat::Scheme::direct      ? "direct"
                        : draws.scheme == bilat::Scheme::rejection ? "rejection"
                                                                    : "importance";
        out["acceptance_rate"] = draws.acceptance_rate;
        out["summary"] = summary_json(summary);
        out["dic"] = ic.dic;
        out["pd"] = ic.pd;
        out["warnings"] = warnings;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        print_summary_csv(std::cout, summary);
    } else {
        std::cout << "model: " << (saturated ? "saturated" : "reduced")
                  << "   prior: " << bilat::to_string(prior.kind) << "   seed: " << seed
                  << "   draws: " << draws.size() << "/" << draws.requested << "\n";
        std::cout << "level: " << fmt("%.3f", opt.level) << "   ess: " << fmt("%.1f", summary.ess)
                  << "   acceptance: " << fmt("%.4f", draws.acceptance_rate) << "\n";
        print_summary_text(std::cout, summary);
        std::cout << "dic: " << fmt("%.4f", ic.dic) << "   pd: " << fmt("%.4f", ic.pd) << "\n";
        for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    }
    return kExitOk;
}

struct BfOpts : CommonOpts {
    std::string prior = "reference";
    std::size_t draws = 1000000;
};

int run_bf(const BfOpts& opt) {
    const auto table = load_table(opt.table_path);
    const auto kind = bilat::prior_kind_from_string(opt.prior);
    if (kind != bilat::PriorKind::jeffreys && kind != bilat::PriorKind::reference) {
        throw InputError("bf supports --prior jeffreys or reference");
    }
    const std::uint64_t seed =
        kind == bilat::PriorKind::jeffreys ? require_seed(opt.seed) : opt.seed.value_or(0);

    const auto bl = bilat::bf_lambda(table, kind, opt.draws, seed);
    const auto bg = bilat::bf_gamma(table, kind, opt.draws, seed);
    const char* method = bl.method == bilat::BfResult::Method::exact ? "exact" : "monte-carlo";

    if (opt.format == "json") {
        json out;
        out["command"] = "bf";
        out["table"] = table_json(table);
        out["prior"] = opt.prior;
        out["method"] = method;
        out["bf_lambda"] = {{"value", bl.value}, {"mc_se", bl.mc_se}, {"k", bl.k_estimate}};
        out["bf_gamma"] = {{"value", bg.value}, {"mc_se", bg.mc_se}, {"k", bg.k_estimate}};
        if (bl.method == bilat::BfResult::Method::monte_carlo) {
            out["draws"] = opt.draws;
            out["seed"] = seed;
        }
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "quantity,value,mc_se,k\n";
        char buf[160];
        std::snprintf(buf, sizeof buf, "bf_lambda,%.10g,%.10g,%.10g\n", bl.value, bl.mc_se,
                      bl.k_estimate);
        std::cout << buf;
        std::snprintf(buf, sizeof buf, "bf_gamma,%.10g,%.10g,%.10g\n", bg.value, bg.mc_se,
                      bg.k_estimate);
        std::cout << buf;
    } else {
        std::cout << "BF_lambda = " << fmt("%.4f", bl.value) << "   BF_gamma = "
                  << fmt("%.4f", bg.value) << "   method = " << method << "\n";
        if (bl.method == bilat::BfResult::Method::monte_carlo) {
            std::cout << "mc_se: lambda " << fmt("%.5f", bl.mc_se) << ", gamma "
                      << fmt("%.5f", bg.mc_se) << "   K: " << fmt("%.6f", bl.k_estimate)
                      << "   draws: " << opt.draws << "   seed: " << seed << "\n";
        }
    }
    return kExitOk;
}

struct MleOpts : CommonOpts {
    std::string model = "reduced";
    std::string adjust = "none";
    double level = 0.95;
};

int run_mle(const MleOpts& opt) {
    const auto table = load_table(opt.table_path);
    const auto adjust =
        opt.adjust == "add-half" ? bilat::Adjustment::add_half : bilat::Adjustment::none;
    if (opt.adjust != "none" && opt.adjust != "add-half") {
        throw InputError("--adjust must be none or add-half");
    }
    const auto mle = opt.model == "saturated" ? bilat::mle_saturated(table, adjust)
                                              : bilat::mle_reduced(table, adjust);
    const auto wald = bilat::wald_intervals(mle, opt.level);

    bool any_unavailable = false;
    for (const auto& [name, e] : wald.entries) any_unavailable |= !e.available;

    if (opt.format == "json") {
        json est = json::object();
        for (const auto& [name, e] : wald.entries) {
            json o{{"estimate", e.estimate}, {"available", e.available}};
            if (e.available) {
                o["sd"] = e.sd;
                o["ci"] = {e.lo, e.hi};
                o["scale"] = e.log_scale ? "log" : "natural";
            }
            est[name] = o;
        }
        json out;
        out["command"] = "mle";
        out["table"] = table_json(table);
        out["model"] = opt.model;
        out["adjust"] = opt.adjust;
        out["level"] = opt.level;
        out["estimands"] = est;
        out["boundary"] = mle.any_boundary();
        out["log_lik"] = mle.log_lik;
        out["aic"] = mle.aic;
        out["bic"] = mle.bic;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "estimand,estimate,sd,lo,hi,available\n";
        char buf[200];
        for (const auto& [name, e] : wald.entries) {
            std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.10g,%.10g,%d\n", name.c_str(),
                          e.estimate, e.sd, e.lo, e.hi, e.available ? 1 : 0);
            std::cout << buf;
        }
    } else {
        std::cout << "model: " << opt.model << "   adjustment: " << opt.adjust
                  << "   level: " << fmt("%.3f", opt.level) << "\n";
        char buf[200];
        std::snprintf(buf, sizeof buf, "%-12s %12s %10s %10s %10s\n", "estimand", "estimate",
                      "sd", "lo", "hi");
        std::cout << buf;
        for (const auto& [name, e] : wald.entries) {
            if (e.available) {
                std::snprintf(buf, sizeof buf, "%-12s %12.6f %10.4f %10.4f %10.4f\n",
                              name.c_str(), e.estimate, e.sd, e.lo, e.hi);
            } else {
                std::snprintf(buf, sizeof buf, "%-12s %12.6f %10s %10s %10s\n", name.c_str(),
                              e.estimate, "--", "--", "--");
            }
            std::cout << buf;
        }
        std::cout << "loglik: " << fmt("%.6f", mle.log_lik) << "   aic: " << fmt("%.4f", mle.aic)
                  << "   bic: " << fmt("%.4f", mle.bic) << "\n";
        if (any_unavailable) {
            std::cout << "note: boundary estimate; some intervals unavailable\n";
        }
    }
    return any_unavailable ? kExitRefusal : kExitOk;
}

struct SampleOpts : CommonOpts {
    std::string model = "reduced";
    std::string prior = "reference";
    std::string scheme = "auto";
    std::vector<double> shapes;
    std::size_t draws = 10000;
};

int run_sample(const SampleOpts& opt) {
    const auto table = load_table(opt.table_path);
    const auto prior = build_prior(opt.prior, opt.shapes, table);
    const auto seed = require_seed(opt.seed);

    bilat::DrawSet draws;
    if (opt.model == "saturated") {
        draws = bilat::sample_saturated(table, prior, opt.draws, seed);
    } else if (opt.scheme == "auto") {
        draws = bilat::sample_reduced(table, prior, opt.draws, seed);
    } else {
        bilat::Scheme scheme = opt.scheme == "direct"      ? bilat::Scheme::direct
                               : opt.scheme == "rejection" ? bilat::Scheme::rejection
                                                           : bilat::Scheme::importance;
        try {
            draws = bilat::sample_reduced(table, prior, opt.draws, seed, scheme);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }

    char buf[240];
    if (draws.model == bilat::ModelKind::saturated) {
        std::cout << "gamma0,gamma1,u,v,weight\n";
        for (std::size_t i = 0; i < draws.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", draws.gamma0[i],
                          draws.gamma1[i], draws.u[i], draws.v[i], draws.weight[i]);
            std::cout << buf;
        }
    } else {
        std::cout << "gamma,u,v,weight\n";
        for (std::size_t i = 0; i < draws.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", draws.gamma0[i],
                          draws.u[i], draws.v[i], draws.weight[i]);
            std::cout << buf;
        }
    }
    return kExitOk;
}

struct SimOpts : CommonOpts {
    double delta = 0.0;
    int m = 25;
    std::size_t reps = 2000;
    double level = 0.90;
    std::size_t draws = 2000;
    std::vector<std::string> methods{"wald", "hpd-uniform", "hpd-jeffreys", "hpd-reference"};
    unsigned threads = 1;
    std::string report = "csv";
};

int run_simstudy(const SimOpts& opt) {
    const auto seed = require_seed(opt.seed);
    std::vector<bilat::sim::Method> methods;
    for (const auto& name : opt.methods) {
        try {
            methods.push_back(bilat::sim::method_from_string(name));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    std::vector<bilat::sim::GridPoint> grid;
    try {
        grid = bilat::sim::build_grid(opt.delta, opt.m);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto summaries =
        bilat::sim::run_grid(grid, opt.reps, opt.level, methods, opt.draws, seed, opt.threads);

    if (opt.report == "coverage") {
        std::cout << bilat::sim::coverage_report(summaries, opt.level).formatted();
    } else {
        std::cout << bilat::sim::criteria_csv(summaries);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Objective Bayesian and frequentist inference for 3x2 bilateral contingency tables"};
    app.require_subcommand(1);

    AnalyzeOpts an;
    auto* analyze = app.add_subcommand("analyze", "Posterior summary of a bilateral table");
    analyze->add_option("--table", an.table_path, "Table file (.json or .csv)")->required();
    analyze->add_option("--model", an.model, "reduced or saturated")
        ->check(CLI::IsMember({"reduced", "saturated"}));
    analyze->add_option("--prior", an.prior, "uniform, jeffreys, reference or custom");
    analyze->add_option("--shapes", an.shapes, "custom prior alpha,beta,a0,b0,a1,b1,d")
        ->delimiter(',');
    analyze->add_option("--scheme", an.scheme, "auto, direct, rejection or importance");
    analyze->add_option("--draws", an.draws, "posterior draw count")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--seed", an.seed, "RNG seed");
    analyze->add_option("--level", an.level, "credible level")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6));
    analyze->add_option("--tail", an.tails, "tail probability, e.g. delta>0 (repeatable)");
    add_format_option(analyze, an.format);

    BfOpts bf;
    auto* bfc = app.add_subcommand("bf", "Bayes factors for lambda0=lambda1 and gamma1=gamma0");
    bfc->add_option("--table", bf.table_path, "Table file (.json or .csv)")->required();
    bfc->add_option("--prior", bf.prior, "jeffreys or reference");
    bfc->add_option("--draws", bf.draws, "Monte Carlo size for the Jeffreys path")
        ->check(CLI::PositiveNumber);
    bfc->add_option("--seed", bf.seed, "RNG seed");
    add_format_option(bfc, bf.format);

    MleOpts ml;
    auto* mlc = app.add_subcommand("mle", "Maximum likelihood with Wald intervals");
    mlc->add_option("--table", ml.table_path, "Table file (.json or .csv)")->required();
    mlc->add_option("--model", ml.model, "reduced or saturated")
        ->check(CLI::IsMember({"reduced", "saturated"}));
    mlc->add_option("--adjust", ml.adjust, "none or add-half");
    mlc->add_option("--level", ml.level, "confidence level")
        ->check(CLI::Range(1e-6, 1.0 - 1e-6));
    add_format_option(mlc, ml.format);

    SampleOpts sa;
    auto* sac = app.add_subcommand("sample", "Dump raw posterior draws as CSV");
    sac->add_option("--table", sa.table_path, "Table file (.json or .csv)")->required();
    sac->add_option("--model", sa.model, "reduced or saturated")
        ->check(CLI::IsMember({"reduced", "saturated"}));
    sac->add_option("--prior", sa.prior, "uniform, jeffreys, reference or custom");
    sac->add_option("--shapes", sa.shapes, "custom prior alpha,beta,a0,b0,a1,b1,d")
        ->delimiter(',');
    sac->add_option("--scheme", sa.scheme, "auto, direct, rejection or importance");
    sac->add_option("--draws", sa.draws, "draw count")->check(CLI::PositiveNumber);
    sac->add_option("--seed", sa.seed, "RNG seed");
    add_format_option(sac, sa.format);

    SimOpts si;
    auto* sic = app.add_subcommand("simstudy", "Coverage/width/MSE comparison harness");
    sic->add_option("--delta", si.delta, "true risk difference in [0, 0.9]");
    sic->add_option("--m", si.m, "per-group sample size")->check(CLI::PositiveNumber);
    sic->add_option("--reps", si.reps, "replicates per grid cell");
    sic->add_option("--level", si.level, "interval level")->check(CLI::Range(1e-6, 1.0 - 1e-6));
    sic->add_option("--draws", si.draws, "posterior draws per Bayesian replicate")
        ->check(CLI::PositiveNumber);
    sic->add_option("--methods", si.methods,
                    "subset of wald,hpd-uniform,hpd-jeffreys,hpd-reference")
        ->delimiter(',');
    sic->add_option("--threads", si.threads, "worker threads over grid cells")
        ->check(CLI::PositiveNumber);
    sic->add_option("--seed", si.seed, "RNG seed");
    sic->add_option("--report", si.report, "csv (per-cell criteria) or coverage (proportions)")
        ->check(CLI::IsMember({"csv", "coverage"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze) return run_analyze(an);
        if (*bfc) return run_bf(bf);
        if (*mlc) return run_mle(ml);
        if (*sac) return run_sample(sa);
        if (*sic) return run_simstudy(si);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitRefusal;
    }
    return kExitInput;
}
