#ifndef POWERFAM_ESTIMATORS_HPP
#define POWERFAM_ESTIMATORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerfam {

enum class Method { mlm, mmlm, pe, mpe };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

// Raised when a sample carries no usable signal for a given estimator
// (all values equal, zero variance, or colliding percentiles).
class DegenerateSampleError : public std::domain_error
{
  public:
    explicit DegenerateSampleError(const std::string& what_arg)
        : std::domain_error(what_arg)
    {
    }
};

// Uniform report of one fit. Estimates are expressed in the doubled
// parameterization (k_hat = 2*gamma_hat always holds). notes carries
// method diagnostics as "key=value" strings, e.g. the sample mean and
// variance for mmlm, the percentiles used for pe/mpe, and the count of
// data points falling outside (0, beta_hat] when beta_hat underestimates
// the observed range (log_likelihood is then the sum over in-support
// points only).
struct FitResult
{
    Method method = Method::mlm;
    double beta_hat = 0.0;
    double gamma_hat = 0.0;
    double k_hat = 0.0;
    std::size_t n = 0;
    double log_likelihood = 0.0;
    std::vector<std::string> notes;
};

// Linear-interpolation sample quantile at 1-based position h = 1+(n-1)q:
// x_(floor h) + (h - floor h)(x_(floor h + 1) - x_(floor h)).
double sample_quantile(const std::vector<double>& data, double q);

// Maximum likelihood: beta_hat = max(x), gamma_hat = n/(2(n ln beta_hat - sum ln x)).
FitResult fit_mle(const std::vector<double>& data);

// Moment-style modification: gamma_hat = (-1+sqrt(1+xbar^2/s^2))/2 with the
// unbiased (n-1) sample variance; beta_hat = max(x).
FitResult fit_mmlm(const std::vector<double>& data);

// Two-percentile estimator from quantile levels L < H:
// gamma_hat = ln(H/L)/(2 ln(P_H/P_L)), beta_hat = P_H/H^(1/(2 gamma_hat)).
FitResult fit_percentile(const std::vector<double>& data, double H = 0.75,
                         double L = 0.25);

// Median-anchored variant: gamma_hat = ln(2H)/(2 ln(P_H/median)),
// beta_hat = P_H/H^(1/(2 gamma_hat)); requires H > 0.5.
FitResult fit_modified_percentile(const std::vector<double>& data, double H = 0.75);

// Dispatch by method tag (pe/mpe use the default levels).
FitResult fit(Method m, const std::vector<double>& data);

} // namespace powerfam

#endif
