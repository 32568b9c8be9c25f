#ifndef POWERFAM_MODEL_LAB_HPP
#define POWERFAM_MODEL_LAB_HPP

#include <string>
#include <utility>
#include <vector>

#include "powerfam/estimators.hpp"
#include "powerfam/power_family.hpp"

namespace powerfam {

struct Dataset
{
    std::string name;
    std::vector<double> values;
    std::string source_note;
};

// Bundled lifetime datasets: "chemotherapy" (45 survival times in years)
// and "devices" (30 failure times). Values are embedded verbatim; the same
// lists ship as data/*.txt for CLI use.
Dataset builtin_dataset(const std::string& name);

// Log-likelihood of the family on data lying in (0, beta]; if any point
// falls outside, value is -infinity and out_of_support counts the
// offenders.
struct LogLik
{
    double value = 0.0;
    int out_of_support = 0;
};
LogLik log_likelihood(const PowerFamily& f, const std::vector<double>& data);

// Penalized-likelihood criteria:
//   aic  = 2p - 2l
//   caic = aic + 2p(p+1)/(n-p-1)   (small-sample corrected form;
//                                   NaN when n <= p+1, where the
//                                   correction's denominator dies)
//   bic  = p ln n - 2l
//   hqic = 2p ln(ln n) - 2l
struct InfoCriteria
{
    double aic = 0.0;
    double caic = 0.0;
    double bic = 0.0;
    double hqic = 0.0;
};
InfoCriteria info_criteria(double loglik, int num_params, int n);

enum class ModelKind { wpdf, pfd, mwpdf1, mwpdf2 };

std::string model_kind_name(ModelKind m);
ModelKind model_kind_from_name(const std::string& name);

// One fitted model in a comparison table. All four families are the same
// law under the effective exponent k, so they share (beta_hat, k_hat) and
// the maximized log-likelihood; they differ in how k decomposes into
// native parameters and in how many parameters the criteria charge:
//   wpdf:   gamma = k/2,          2 parameters
//   pfd:    gamma = k,            2 parameters
//   mwpdf1: gamma = k/2, theta=1, 3 parameters (only gamma(1+theta) is
//   mwpdf2: gamma = k/2, theta=1, 3 parameters  identifiable; theta is
//                                    reported at the canonical point 1)
struct ModelReport
{
    ModelKind model = ModelKind::wpdf;
    double beta_hat = 0.0;
    double k_hat = 0.0;
    double gamma_hat = 0.0;
    double theta_hat = 0.0;
    bool has_theta = false;
    double log_likelihood = 0.0;
    int num_params = 0;
    InfoCriteria ic;
    bool failed = false;
    std::string note;
};

// Fits each requested model by maximum likelihood and returns reports
// sorted ascending by aic (ties broken by fewer parameters, then input
// order). Models whose fit raises an error are annotated, marked failed,
// and placed after all ranked models.
std::vector<ModelReport> compare_models(const std::vector<double>& data,
                                        const std::vector<ModelKind>& models);

// Scaled total-time-on-test transform: for sorted x_(1) <= ... <= x_(n),
// T_i = [sum_{j<=i} x_(j) + (n-i) x_(i)] / sum_j x_(j) at u = i/n.
// T is nondecreasing and T_n = 1 exactly.
std::vector<std::pair<double, double>> ttt_transform(const std::vector<double>& data);

} // namespace powerfam

#endif
