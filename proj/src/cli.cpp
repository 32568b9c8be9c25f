#include "powerfam/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "powerfam/data_io.hpp"
#include "powerfam/estimators.hpp"
#include "powerfam/json_io.hpp"
#include "powerfam/mc_study.hpp"
#include "powerfam/model_lab.hpp"
#include "powerfam/power_family.hpp"
#include "powerfam/properties.hpp"

namespace powerfam {
namespace cli {

namespace {

std::string fmt6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::string> split_list(const std::string& csv)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(csv);
    while (std::getline(stream, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

double parse_double(const std::string& token, const std::string& what)
{
    std::size_t consumed = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != token.size())
        throw std::domain_error("malformed " + what + ": '" + token + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& csv, const std::string& what)
{
    std::vector<double> out;
    for (const std::string& tok : split_list(csv))
        out.push_back(parse_double(tok, what));
    if (out.empty())
        throw std::domain_error("empty list for " + what);
    return out;
}

// Either the name of a bundled dataset or a path to a numeric text file.
std::vector<double> load_data(const std::string& spec)
{
    if (spec == "chemotherapy" || spec == "devices")
        return builtin_dataset(spec).values;
    return read_values_file(spec);
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
}

PowerFamily make_family(const std::string& origin, double gamma, double beta,
                        double theta, bool theta_given)
{
    const Origin o = origin_from_name(origin);
    switch (o) {
    case Origin::pfd:
        return PowerFamily::pfd(gamma, beta);
    case Origin::wpdf:
        return PowerFamily::wpdf(gamma, beta);
    case Origin::mwpdf1:
        if (!theta_given)
            throw std::domain_error("origin mwpdf1 requires --theta");
        return PowerFamily::mwpdf1(gamma, theta, beta);
    case Origin::mwpdf2:
        if (!theta_given)
            throw std::domain_error("origin mwpdf2 requires --theta");
        return PowerFamily::mwpdf2(gamma, theta, beta);
    }
    throw std::logic_error("unreachable origin");
}

struct FitArgs
{
    std::string data;
    std::string method = "mlm";
    double H = 0.75;
    double L = 0.25;
    std::string format = "json";
    std::string out_path;
};

int run_fit(const FitArgs& a, std::ostream& out)
{
    const std::vector<double> data = load_data(a.data);
    const Method m = method_from_name(a.method);
    FitResult r;
    switch (m) {
    case Method::pe: r = fit_percentile(data, a.H, a.L); break;
    case Method::mpe: r = fit_modified_percentile(data, a.H); break;
    default: r = fit(m, data); break;
    }
    std::string text;
    if (a.format == "json") {
        text = to_json(r).dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "key,value\n";
        csv << "method," << method_name(r.method) << "\n";
        csv << "beta_hat," << fmt6(r.beta_hat) << "\n";
        csv << "gamma_hat," << fmt6(r.gamma_hat) << "\n";
        csv << "k_hat," << fmt6(r.k_hat) << "\n";
        csv << "n," << r.n << "\n";
        csv << "log_likelihood," << fmt6(r.log_likelihood) << "\n";
        std::string joined;
        for (const std::string& note : r.notes) {
            if (!joined.empty())
                joined += ';';
            joined += note;
        }
        csv << "notes," << joined << "\n";
        text = csv.str();
    }
    write_output(text, a.out_path, out);
    return 0;
}

struct SampleArgs
{
    std::string origin = "wpdf";
    double gamma = 0.0;
    double beta = 0.0;
    double theta = 0.0;
    bool theta_given = false;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path;
};

int run_sample(const SampleArgs& a, std::ostream& out)
{
    const PowerFamily f =
        make_family(a.origin, a.gamma, a.beta, a.theta, a.theta_given);
    const SampleBatch batch = f.sample(a.n, a.seed);
    std::string text;
    if (a.format == "json") {
        nlohmann::json j = to_json(f);
        j["n"] = a.n;
        j["seed"] = a.seed;
        j["values"] = batch.values;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "value\n";
        for (double v : batch.values)
            csv << fmt6(v) << "\n";
        text = csv.str();
    }
    write_output(text, a.out_path, out);
    return 0;
}

struct SimulateArgs
{
    std::string config_path;
    int reps = 5000;
    std::string sizes = "40,100";
    std::string pairs = "1:2,3:2,4:3";
    std::string methods = "mlm,mmlm,pe,mpe";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 1;
    std::string format = "csv";
    std::string out_path;
};

StudyConfig study_config_from_args(const SimulateArgs& a)
{
    if (!a.config_path.empty()) {
        std::ifstream in(a.config_path);
        if (!in)
            throw std::runtime_error("cannot open config file: " + a.config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::domain_error("invalid config JSON: " + std::string(e.what()));
        }
        return study_config_from_json(j);
    }
    StudyConfig cfg;
    cfg.replications = a.reps;
    cfg.sample_sizes.clear();
    for (double v : parse_double_list(a.sizes, "sample size"))
        cfg.sample_sizes.push_back(static_cast<int>(v));
    cfg.param_pairs.clear();
    for (const std::string& tok : split_list(a.pairs)) {
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::domain_error("parameter pair '" + tok +
                                    "' must look like beta:gamma");
        cfg.param_pairs.emplace_back(
            parse_double(tok.substr(0, colon), "beta"),
            parse_double(tok.substr(colon + 1), "gamma"));
    }
    cfg.methods.clear();
    for (const std::string& tok : split_list(a.methods))
        cfg.methods.push_back(method_from_name(tok));
    cfg.master_seed = a.seed;
    return cfg;
}

int run_simulate(const SimulateArgs& a, std::ostream& out)
{
    StudyConfig cfg = study_config_from_args(a);
    // An explicit --seed (or POWERFAM_SEED) overrides a config file's seed.
    if (a.seed_given)
        cfg.master_seed = a.seed;
    const std::vector<StudyCell> cells = run_study(cfg, a.threads);
    const std::string text = a.format == "json" ? to_json(cells).dump(2) + "\n"
                                                : study_csv(cells);
    write_output(text, a.out_path, out);
    return 0;
}

struct CompareArgs
{
    std::string data;
    std::string models = "wpdf,pfd,mwpdf1,mwpdf2";
    std::string format = "csv";
    std::string out_path;
};

int run_compare(const CompareArgs& a, std::ostream& out, std::ostream& err)
{
    const std::vector<double> data = load_data(a.data);
    std::vector<ModelKind> kinds;
    for (const std::string& tok : split_list(a.models))
        kinds.push_back(model_kind_from_name(tok));
    if (kinds.empty())
        throw std::domain_error("no models requested");
    const std::vector<ModelReport> reports = compare_models(data, kinds);
    std::string text;
    if (a.format == "json") {
        text = to_json(reports).dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "distribution,aic,caic,bic,hqic\n";
        for (const ModelReport& r : reports) {
            if (r.failed) {
                err << "model " << model_kind_name(r.model)
                    << " failed to fit: " << r.note << "\n";
                csv << model_kind_name(r.model) << ",,,,\n";
                continue;
            }
            csv << model_kind_name(r.model) << "," << fmt6(r.ic.aic) << ","
                << fmt6(r.ic.caic) << "," << fmt6(r.ic.bic) << ","
                << fmt6(r.ic.hqic) << "\n";
        }
        text = csv.str();
    }
    write_output(text, a.out_path, out);
    return 0;
}

struct TttArgs
{
    std::string data;
    std::string format = "csv";
    std::string out_path;
};

int run_ttt(const TttArgs& a, std::ostream& out)
{
    const auto points = ttt_transform(load_data(a.data));
    std::string text;
    if (a.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [u, t] : points)
            arr.push_back({{"u", u}, {"t", t}});
        text = arr.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "u,t\n";
        for (const auto& [u, t] : points)
            csv << fmt6(u) << "," << fmt6(t) << "\n";
        text = csv.str();
    }
    write_output(text, a.out_path, out);
    return 0;
}

struct PropsArgs
{
    std::string property;
    std::string origin = "wpdf";
    std::string gammas = "1";
    std::string betas = "1";
    std::string thetas;
    std::string xs;
    std::string grid;
    int r = 1;
    int j = 1;
    int order_n = 1;
    double lower = 0.0;
    std::string format = "csv";
    std::string out_path;
};

std::vector<double> props_args_grid(const PropsArgs& a)
{
    if (!a.xs.empty() && !a.grid.empty())
        throw std::domain_error("--xs and --grid are mutually exclusive");
    if (!a.xs.empty())
        return parse_double_list(a.xs, "argument");
    if (!a.grid.empty()) {
        std::string spec = a.grid;
        std::replace(spec.begin(), spec.end(), ':', ' ');
        std::istringstream in(spec);
        double lo = 0.0, hi = 0.0;
        int count = 0;
        if (!(in >> lo >> hi >> count) || count < 1 || !(hi >= lo))
            throw std::domain_error("--grid must look like lo:hi:count");
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            out.push_back(lo);
            return out;
        }
        for (int i = 0; i < count; ++i)
            out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                   static_cast<double>(count - 1));
        return out;
    }
    return {};
}

int run_props(const PropsArgs& a, std::ostream& out)
{
    // Single-argument curve properties evaluate at every --xs/--grid point;
    // scalar properties take no argument (the moment orders come from --r).
    const bool needs_arg =
        a.property == "pdf" || a.property == "cdf" || a.property == "sf" ||
        a.property == "hrf" || a.property == "mills" || a.property == "quantile" ||
        a.property == "mrf" || a.property == "vitality" || a.property == "lorenz" ||
        a.property == "bonferroni" || a.property == "renyi" ||
        a.property == "information" || a.property == "mgf" ||
        a.property == "incomplete_moment" || a.property == "conditional_moment" ||
        a.property == "dtm" || a.property == "order_stat_pdf";
    const bool scalar =
        a.property == "mean" || a.property == "variance" || a.property == "cv" ||
        a.property == "shannon" || a.property == "raw_moment" ||
        a.property == "inverse_moment";
    if (!needs_arg && !scalar)
        throw std::domain_error("unknown property '" + a.property + "'");

    const std::vector<double> args = props_args_grid(a);
    if (needs_arg && args.empty())
        throw std::domain_error("property '" + a.property +
                                "' needs evaluation points (--xs or --grid)");

    auto eval = [&](const PowerFamily& f, double x) -> double {
        if (a.property == "pdf") return f.pdf(x);
        if (a.property == "cdf") return f.cdf(x);
        if (a.property == "sf") return f.sf(x);
        if (a.property == "hrf") return f.hrf(x);
        if (a.property == "mills") return f.mills(x);
        if (a.property == "quantile") return f.quantile(x);
        if (a.property == "mrf") return mrf(f, x);
        if (a.property == "vitality") return vitality(f, x);
        if (a.property == "lorenz") return lorenz(f, x);
        if (a.property == "bonferroni") return bonferroni(f, x);
        if (a.property == "renyi") return renyi_entropy(f, x);
        if (a.property == "information") return information_fn(f, x);
        if (a.property == "mgf") return mgf(f, x).value;
        if (a.property == "incomplete_moment") return incomplete_moment(f, a.r, x);
        if (a.property == "conditional_moment") return conditional_moment(f, a.r, x);
        if (a.property == "dtm") return dtm(f, a.lower, x);
        if (a.property == "order_stat_pdf")
            return order_stat_pdf(f, a.j, a.order_n, x);
        throw std::logic_error("unreachable property");
    };
    auto eval_scalar = [&](const PowerFamily& f) -> std::pair<double, bool> {
        if (a.property == "mean") return {mean(f), false};
        if (a.property == "variance") return {variance(f), false};
        if (a.property == "cv") return {cv(f), false};
        if (a.property == "shannon") return {shannon_entropy(f), false};
        if (a.property == "raw_moment") return {raw_moment(f, a.r), true};
        if (a.property == "inverse_moment") return {inverse_moment(f, a.r), true};
        throw std::logic_error("unreachable property");
    };

    const std::vector<double> gammas = parse_double_list(a.gammas, "gamma");
    const std::vector<double> betas = parse_double_list(a.betas, "beta");
    std::vector<double> thetas;
    const bool theta_given = !a.thetas.empty();
    if (theta_given)
        thetas = parse_double_list(a.thetas, "theta");
    else
        thetas = {0.0};

    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    if (a.format != "json")
        csv << "origin,beta,gamma,theta,k,property,arg,value\n";

    for (double gamma : gammas) {
        for (double beta : betas) {
            for (double theta : thetas) {
                const PowerFamily f =
                    make_family(a.origin, gamma, beta, theta, theta_given);
                const std::string theta_text =
                    f.has_theta() ? fmt6(f.theta()) : std::string();
                auto emit = [&](const std::string& arg_text, double arg_value,
                                bool has_arg, double value) {
                    if (a.format == "json") {
                        nlohmann::json row{{"origin", origin_name(f.origin())},
                                           {"beta", f.beta()},
                                           {"gamma", f.gamma()},
                                           {"k", f.k()},
                                           {"property", a.property},
                                           {"value", value}};
                        row["theta"] =
                            f.has_theta() ? nlohmann::json(f.theta())
                                          : nlohmann::json(nullptr);
                        row["arg"] = has_arg ? nlohmann::json(arg_value)
                                             : nlohmann::json(nullptr);
                        rows.push_back(std::move(row));
                    } else {
                        csv << origin_name(f.origin()) << "," << fmt6(f.beta())
                            << "," << fmt6(f.gamma()) << "," << theta_text << ","
                            << fmt6(f.k()) << "," << a.property << "," << arg_text
                            << "," << fmt6(value) << "\n";
                    }
                };
                if (needs_arg) {
                    for (double x : args)
                        emit(fmt6(x), x, true, eval(f, x));
                } else {
                    const auto [value, uses_r] = eval_scalar(f);
                    emit(uses_r ? std::to_string(a.r) : std::string(),
                         static_cast<double>(a.r), uses_r, value);
                }
            }
        }
    }

    const std::string text =
        a.format == "json" ? rows.dump(2) + "\n" : csv.str();
    write_output(text, a.out_path, out);
    return 0;
}

void add_format_flag(CLI::App* cmd, std::string& target)
{
    cmd->add_option("--format", target, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"bounded power-law family toolkit: fitting, simulation, "
                 "model comparison, and reliability curves"};
    app.require_subcommand(1);

    FitArgs fit_args;
    CLI::App* fit_cmd =
        app.add_subcommand("fit", "fit one estimator to a data file or bundled dataset");
    fit_cmd->add_option("--data", fit_args.data,
                        "dataset name (chemotherapy, devices) or path")
        ->required();
    fit_cmd->add_option("--method", fit_args.method, "mlm, mmlm, pe, or mpe");
    fit_cmd->add_option("--H", fit_args.H, "upper percentile level for pe/mpe");
    fit_cmd->add_option("--L", fit_args.L, "lower percentile level for pe");
    add_format_flag(fit_cmd, fit_args.format);
    fit_cmd->add_option("--out", fit_args.out_path, "write output to this path");

    SampleArgs sample_args;
    CLI::App* sample_cmd =
        app.add_subcommand("sample", "draw a reproducible sample from a family member");
    sample_cmd->add_option("--origin", sample_args.origin,
                           "pfd, wpdf, mwpdf1, or mwpdf2");
    sample_cmd->add_option("--gamma", sample_args.gamma, "shape parameter")->required();
    sample_cmd->add_option("--beta", sample_args.beta, "scale parameter")->required();
    CLI::Option* theta_opt =
        sample_cmd->add_option("--theta", sample_args.theta, "mwpdf shape modifier");
    sample_cmd->add_option("--n", sample_args.n, "sample size")->required();
    sample_cmd->add_option("--seed", sample_args.seed, "stream seed")
        ->envname("POWERFAM_SEED");
    add_format_flag(sample_cmd, sample_args.format);
    sample_cmd->add_option("--out", sample_args.out_path, "write output to this path");

    SimulateArgs sim_args;
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Monte Carlo estimator comparison over a parameter grid");
    CLI::Option* config_opt =
        sim_cmd->add_option("--config", sim_args.config_path, "study config JSON file");
    sim_cmd->add_option("--reps", sim_args.reps, "replications per cell")
        ->excludes(config_opt);
    sim_cmd->add_option("--sizes", sim_args.sizes, "sample sizes, e.g. 40,100")
        ->excludes(config_opt);
    sim_cmd
        ->add_option("--pairs", sim_args.pairs,
                     "beta:gamma pairs, e.g. 1:2,3:2,4:3")
        ->excludes(config_opt);
    sim_cmd->add_option("--methods", sim_args.methods, "subset of mlm,mmlm,pe,mpe")
        ->excludes(config_opt);
    CLI::Option* sim_seed_opt = sim_cmd->add_option("--seed", sim_args.seed,
                                                    "master seed")
                                    ->envname("POWERFAM_SEED");
    sim_cmd->add_option("--threads", sim_args.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    add_format_flag(sim_cmd, sim_args.format);
    sim_cmd->add_option("--out", sim_args.out_path, "write output to this path");

    CompareArgs cmp_args;
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "rank family parameterizations by information criteria");
    cmp_cmd->add_option("--data", cmp_args.data,
                        "dataset name (chemotherapy, devices) or path")
        ->required();
    cmp_cmd->add_option("--models", cmp_args.models,
                        "subset of wpdf,pfd,mwpdf1,mwpdf2");
    add_format_flag(cmp_cmd, cmp_args.format);
    cmp_cmd->add_option("--out", cmp_args.out_path, "write output to this path");

    TttArgs ttt_args;
    CLI::App* ttt_cmd = app.add_subcommand(
        "ttt", "scaled total-time-on-test transform of a dataset");
    ttt_cmd->add_option("--data", ttt_args.data,
                        "dataset name (chemotherapy, devices) or path")
        ->required();
    add_format_flag(ttt_cmd, ttt_args.format);
    ttt_cmd->add_option("--out", ttt_args.out_path, "write output to this path");

    PropsArgs props_args;
    CLI::App* props_cmd = app.add_subcommand(
        "props", "tabulate distribution properties over a parameter grid");
    props_cmd->add_option("--property", props_args.property, "property name")
        ->required();
    props_cmd->add_option("--origin", props_args.origin,
                          "pfd, wpdf, mwpdf1, or mwpdf2");
    props_cmd->add_option("--gamma", props_args.gammas,
                          "gamma value or comma list");
    props_cmd->add_option("--beta", props_args.betas, "beta value or comma list");
    props_cmd->add_option("--theta", props_args.thetas,
                          "theta value or comma list (mwpdf only)");
    props_cmd->add_option("--xs", props_args.xs, "evaluation points, comma list");
    props_cmd->add_option("--grid", props_args.grid,
                          "evaluation grid lo:hi:count");
    props_cmd->add_option("--r", props_args.r, "moment order");
    props_cmd->add_option("--j", props_args.j, "order statistic index");
    props_cmd->add_option("--order-n", props_args.order_n,
                          "order statistic sample size");
    props_cmd->add_option("--lower", props_args.lower,
                          "lower truncation point for dtm");
    add_format_flag(props_cmd, props_args.format);
    props_cmd->add_option("--out", props_args.out_path, "write output to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    sample_args.theta_given = theta_opt->count() > 0;
    sim_args.seed_given = sim_seed_opt->count() > 0;

    try {
        if (fit_cmd->parsed())
            return run_fit(fit_args, out);
        if (sample_cmd->parsed())
            return run_sample(sample_args, out);
        if (sim_cmd->parsed())
            return run_simulate(sim_args, out);
        if (cmp_cmd->parsed())
            return run_compare(cmp_args, out, err);
        if (ttt_cmd->parsed())
            return run_ttt(ttt_args, out);
        if (props_cmd->parsed())
            return run_props(props_args, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

} // namespace cli
} // namespace powerfam
