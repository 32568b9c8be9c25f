#include "powerfam/mc_study.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "powerfam/power_family.hpp"
#include "powerfam/rng.hpp"

namespace powerfam {

namespace {

// Replications are accumulated in fixed chunks whose partial sums are
// combined in chunk order, so floating-point reduction order — and hence
// the output — is independent of how many threads ran the chunks.
constexpr int kChunk = 512;

// Running sums for one estimator within one chunk: plain sums and squares
// of both estimates (for means and their standard errors) plus squared and
// fourth-power errors (for MSEs and their standard errors).
struct Acc
{
    double sum_b = 0.0, sum_b2 = 0.0, err2_b = 0.0, err4_b = 0.0;
    double sum_g = 0.0, sum_g2 = 0.0, err2_g = 0.0, err4_g = 0.0;
    long ok = 0, failures = 0;

    void add(double beta_hat, double gamma_hat, double beta_true, double gamma_true)
    {
        const double eb = beta_hat - beta_true;
        const double eg = gamma_hat - gamma_true;
        sum_b += beta_hat;
        sum_b2 += beta_hat * beta_hat;
        err2_b += eb * eb;
        err4_b += eb * eb * eb * eb;
        sum_g += gamma_hat;
        sum_g2 += gamma_hat * gamma_hat;
        err2_g += eg * eg;
        err4_g += eg * eg * eg * eg;
        ++ok;
    }

    void merge(const Acc& other)
    {
        sum_b += other.sum_b;
        sum_b2 += other.sum_b2;
        err2_b += other.err2_b;
        err4_b += other.err4_b;
        sum_g += other.sum_g;
        sum_g2 += other.sum_g2;
        err2_g += other.err2_g;
        err4_g += other.err4_g;
        ok += other.ok;
        failures += other.failures;
    }
};

std::uint64_t cell_stream(int n, double beta, double gamma)
{
    std::uint64_t h = rng::mix64(std::bit_cast<std::uint64_t>(beta));
    h = rng::mix64(h ^ std::bit_cast<std::uint64_t>(gamma));
    return rng::mix64(h ^ static_cast<std::uint64_t>(n));
}

// Standard error of a Monte Carlo average: sd of the per-replication
// stream divided by sqrt(count), with the unbiased variance estimate.
double se_of_mean(double sum, double sum_sq, long count)
{
    if (count < 2)
        return 0.0;
    const double m = sum / static_cast<double>(count);
    double var = (sum_sq - static_cast<double>(count) * m * m) /
                 (static_cast<double>(count) - 1.0);
    if (var < 0.0)
        var = 0.0;
    return std::sqrt(var / static_cast<double>(count));
}

StudyCell finish_cell(Method m, int n, double beta, double gamma, const Acc& a)
{
    StudyCell c;
    c.method = m;
    c.n = n;
    c.beta_true = beta;
    c.gamma_true = gamma;
    c.failures = a.failures;
    if (a.ok > 0) {
        const double count = static_cast<double>(a.ok);
        c.mean_beta_hat = a.sum_b / count;
        c.mean_gamma_hat = a.sum_g / count;
        c.mse_beta = a.err2_b / count;
        c.mse_gamma = a.err2_g / count;
        c.se_mean_beta = se_of_mean(a.sum_b, a.sum_b2, a.ok);
        c.se_mean_gamma = se_of_mean(a.sum_g, a.sum_g2, a.ok);
        c.se_mse_beta = se_of_mean(a.err2_b, a.err4_b, a.ok);
        c.se_mse_gamma = se_of_mean(a.err2_g, a.err4_g, a.ok);
    }
    return c;
}

} // namespace

OracleMoments mle_analytic_oracle(int n, double beta, double gamma)
{
    if (n < 4)
        throw std::domain_error(
            "analytic oracle requires n >= 4 (second moment of the shape estimate)");
    const double k = 2.0 * gamma;
    const double nk = static_cast<double>(n) * k;
    OracleMoments o;
    o.e_beta = beta * nk / (nk + 1.0);
    const double e_beta2 = beta * beta * nk / (nk + 2.0);
    o.mse_beta = e_beta2 - 2.0 * beta * o.e_beta + beta * beta;
    o.e_gamma = nk / (2.0 * (n - 2.0));
    const double e_gamma2 =
        static_cast<double>(n) * n * k * k / (4.0 * (n - 2.0) * (n - 3.0));
    o.mse_gamma = e_gamma2 - 2.0 * gamma * o.e_gamma + gamma * gamma;
    return o;
}

std::uint64_t replication_seed(const StudyConfig& cfg, int n, double beta,
                               double gamma, int replication)
{
    return rng::derive_seed(cfg.master_seed, cell_stream(n, beta, gamma),
                            static_cast<std::uint64_t>(replication));
}

std::vector<StudyCell> run_study(const StudyConfig& cfg, int threads)
{
    if (cfg.replications < 1)
        throw std::domain_error("study requires at least 1 replication");
    if (cfg.sample_sizes.empty() || cfg.param_pairs.empty() || cfg.methods.empty())
        throw std::domain_error("study grid must name at least one size, pair, and method");
    for (int n : cfg.sample_sizes)
        if (n < 2)
            throw std::domain_error("study sample sizes must be at least 2");
    for (auto [beta, gamma] : cfg.param_pairs)
        if (!(beta > 0.0 && gamma > 0.0))
            throw std::domain_error("study parameter pairs must be strictly positive");
    if (threads < 1)
        threads = 1;

    const std::size_t n_methods = cfg.methods.size();
    const int n_chunks = (cfg.replications + kChunk - 1) / kChunk;

    // results[size][pair][method]
    std::vector<std::vector<std::vector<Acc>>> totals(
        cfg.sample_sizes.size(),
        std::vector<std::vector<Acc>>(cfg.param_pairs.size(),
                                      std::vector<Acc>(n_methods)));

    for (std::size_t si = 0; si < cfg.sample_sizes.size(); ++si) {
        const int n = cfg.sample_sizes[si];
        for (std::size_t pi = 0; pi < cfg.param_pairs.size(); ++pi) {
            const auto [beta, gamma] = cfg.param_pairs[pi];
            const PowerFamily family = PowerFamily::wpdf(gamma, beta);

            std::vector<std::vector<Acc>> chunk_slots(
                n_chunks, std::vector<Acc>(n_methods));

            auto run_chunk = [&](int chunk) {
                std::vector<Acc>& slot = chunk_slots[chunk];
                const int rep_begin = chunk * kChunk;
                const int rep_end =
                    std::min(cfg.replications, rep_begin + kChunk);
                for (int rep = rep_begin; rep < rep_end; ++rep) {
                    const std::uint64_t seed =
                        replication_seed(cfg, n, beta, gamma, rep);
                    const SampleBatch batch =
                        family.sample(static_cast<std::size_t>(n), seed);
                    for (std::size_t mi = 0; mi < n_methods; ++mi) {
                        try {
                            const FitResult r = fit(cfg.methods[mi], batch.values);
                            slot[mi].add(r.beta_hat, r.gamma_hat, beta, gamma);
                        } catch (const DegenerateSampleError&) {
                            ++slot[mi].failures;
                        }
                    }
                }
            };

            if (threads == 1 || n_chunks == 1) {
                for (int c = 0; c < n_chunks; ++c)
                    run_chunk(c);
            } else {
                std::atomic<int> next_chunk{0};
                auto worker = [&] {
                    for (;;) {
                        const int c = next_chunk.fetch_add(1);
                        if (c >= n_chunks)
                            return;
                        run_chunk(c);
                    }
                };
                std::vector<std::thread> pool;
                const int n_workers = std::min(threads, n_chunks);
                pool.reserve(static_cast<std::size_t>(n_workers));
                for (int t = 0; t < n_workers; ++t)
                    pool.emplace_back(worker);
                for (std::thread& t : pool)
                    t.join();
            }

            // Sequential chunk-order reduction keeps the sums bit-identical
            // no matter which thread ran which chunk.
            for (int c = 0; c < n_chunks; ++c)
                for (std::size_t mi = 0; mi < n_methods; ++mi)
                    totals[si][pi][mi].merge(chunk_slots[c][mi]);
        }
    }

    std::vector<StudyCell> cells;
    cells.reserve(n_methods * cfg.sample_sizes.size() * cfg.param_pairs.size());
    for (std::size_t mi = 0; mi < n_methods; ++mi)
        for (std::size_t si = 0; si < cfg.sample_sizes.size(); ++si)
            for (std::size_t pi = 0; pi < cfg.param_pairs.size(); ++pi) {
                const auto [beta, gamma] = cfg.param_pairs[pi];
                cells.push_back(finish_cell(cfg.methods[mi], cfg.sample_sizes[si],
                                            beta, gamma, totals[si][pi][mi]));
            }
    return cells;
}

std::string study_csv(const std::vector<StudyCell>& cells)
{
    std::string out =
        "method,n,beta,gamma,mean_beta_hat,se_mean_beta,mean_gamma_hat,"
        "se_mean_gamma,mse_beta,se_mse_beta,mse_gamma,se_mse_gamma,failures\n";
    char buf[512];
    for (const StudyCell& c : cells) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%d,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%ld\n",
                      method_name(c.method).c_str(), c.n, c.beta_true, c.gamma_true,
                      c.mean_beta_hat, c.se_mean_beta, c.mean_gamma_hat,
                      c.se_mean_gamma, c.mse_beta, c.se_mse_beta, c.mse_gamma,
                      c.se_mse_gamma, c.failures);
        out += buf;
    }
    return out;
}

} // namespace powerfam
