#ifndef POWERFAM_MC_STUDY_HPP
#define POWERFAM_MC_STUDY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "powerfam/estimators.hpp"

namespace powerfam {

// Monte Carlo comparison grid. Samples are drawn from the doubled
// parameterization (effective exponent k = 2*gamma) for each (beta, gamma)
// pair, at each sample size, and every configured estimator is applied to
// the same generated sample, replication by replication.
struct StudyConfig
{
    int replications = 5000;
    std::vector<int> sample_sizes = {40, 100};
    std::vector<std::pair<double, double>> param_pairs = {{1, 2}, {3, 2}, {4, 3}};
    std::vector<Method> methods = {Method::mlm, Method::mmlm, Method::pe, Method::mpe};
    std::uint64_t master_seed = 0;
};

// One result row: averages and mean squared errors over the successful
// replications of one (method, n, beta, gamma) cell, with Monte Carlo
// standard errors for each reported statistic. failures counts
// replications where the estimator raised a degenerate-sample error
// (excluded from the averages).
struct StudyCell
{
    Method method = Method::mlm;
    int n = 0;
    double beta_true = 0.0;
    double gamma_true = 0.0;
    double mean_beta_hat = 0.0;
    double mean_gamma_hat = 0.0;
    double mse_beta = 0.0;
    double mse_gamma = 0.0;
    double se_mean_beta = 0.0;
    double se_mean_gamma = 0.0;
    double se_mse_beta = 0.0;
    double se_mse_gamma = 0.0;
    long failures = 0;
};

// Exact sampling moments of the maximum-likelihood estimates under the
// doubled parameterization (k = 2*gamma):
//   E[beta_hat]   = beta*nk/(nk+1),       E[beta_hat^2] = beta^2*nk/(nk+2)
//   E[gamma_hat]  = nk/(2(n-2)),          E[gamma_hat^2] = n^2 k^2/(4(n-2)(n-3))
// (ln(beta/X) is exponential with rate k, so the sum of ln(max/x_i) over a
// sample is Gamma(n-1, rate k) once the maximum's slot is conditioned out.)
// Requires n >= 4 for the second moment of gamma_hat to exist.
struct OracleMoments
{
    double e_beta = 0.0;
    double mse_beta = 0.0;
    double e_gamma = 0.0;
    double mse_gamma = 0.0;
};
OracleMoments mle_analytic_oracle(int n, double beta, double gamma);

// Runs the study. Replications are processed in fixed-size chunks whose
// partial sums are reduced in chunk order, and every replication's seed is
// derived from (master_seed, cell content, replication index), so the
// result is bit-identical for any thread count.
std::vector<StudyCell> run_study(const StudyConfig& cfg, int threads = 1);

// Seed a single replication would use; exposed so tests can regenerate
// exactly the sample a study row saw.
std::uint64_t replication_seed(const StudyConfig& cfg, int n, double beta,
                               double gamma, int replication);

// CSV rendering (6 significant digits), one row per cell:
// method,n,beta,gamma,mean_beta_hat,se_mean_beta,mean_gamma_hat,
// se_mean_gamma,mse_beta,se_mse_beta,mse_gamma,se_mse_gamma,failures
std::string study_csv(const std::vector<StudyCell>& cells);

} // namespace powerfam

#endif
