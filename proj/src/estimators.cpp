#include "powerfam/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace powerfam {

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_valid_sample(const std::vector<double>& data)
{
    if (data.size() < 2)
        throw std::domain_error("estimation requires at least 2 observations");
    for (double x : data)
        if (!(x > 0.0))
            throw std::domain_error("all observations must be strictly positive, got " +
                                    fmt(x));
}

// Log-likelihood of the fitted law at (k_hat, beta_hat) over the points
// inside (0, beta_hat]; returns the in-support sum and the count outside.
std::pair<double, int> support_log_likelihood(const std::vector<double>& data,
                                              double k_hat, double beta_hat)
{
    const double log_k = std::log(k_hat);
    const double log_b = std::log(beta_hat);
    double ll = 0.0;
    int outside = 0;
    for (double x : data) {
        if (x > beta_hat) {
            ++outside;
            continue;
        }
        ll += log_k + (k_hat - 1.0) * std::log(x) - k_hat * log_b;
    }
    return {ll, outside};
}

FitResult finish_percentile_fit(Method method, const std::vector<double>& data,
                                double gamma_hat, double beta_hat,
                                std::vector<std::string> notes)
{
    FitResult r;
    r.method = method;
    r.beta_hat = beta_hat;
    r.gamma_hat = gamma_hat;
    r.k_hat = 2.0 * gamma_hat;
    r.n = data.size();
    auto [ll, outside] = support_log_likelihood(data, r.k_hat, r.beta_hat);
    r.log_likelihood = ll;
    notes.push_back("out_of_support=" + std::to_string(outside));
    r.notes = std::move(notes);
    return r;
}

} // namespace

std::string method_name(Method m)
{
    switch (m) {
    case Method::mlm: return "mlm";
    case Method::mmlm: return "mmlm";
    case Method::pe: return "pe";
    case Method::mpe: return "mpe";
    }
    throw std::logic_error("unreachable method");
}

Method method_from_name(const std::string& name)
{
    if (name == "mlm") return Method::mlm;
    if (name == "mmlm") return Method::mmlm;
    if (name == "pe") return Method::pe;
    if (name == "mpe") return Method::mpe;
    throw std::domain_error("unknown method '" + name +
                            "' (expected mlm, mmlm, pe, or mpe)");
}

double sample_quantile(const std::vector<double>& data, double q)
{
    if (data.empty())
        throw std::domain_error("sample quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::domain_error("quantile level must lie in [0, 1]");
    std::vector<double> sorted(data);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double h = 1.0 + (static_cast<double>(n) - 1.0) * q;
    const std::size_t lo = static_cast<std::size_t>(h); // 1-based floor
    if (lo >= n)
        return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1]);
}

FitResult fit_mle(const std::vector<double>& data)
{
    require_valid_sample(data);
    const std::size_t n = data.size();
    const double beta_hat = *std::max_element(data.begin(), data.end());
    double sum_log = 0.0;
    for (double x : data)
        sum_log += std::log(x);
    const double denom = static_cast<double>(n) * std::log(beta_hat) - sum_log;
    if (denom <= 0.0)
        throw DegenerateSampleError(
            "all observations equal (" + fmt(beta_hat) +
            "); the shape estimate's denominator vanishes");
    const double gamma_hat = static_cast<double>(n) / (2.0 * denom);
    const double k_hat = 2.0 * gamma_hat;

    FitResult r;
    r.method = Method::mlm;
    r.beta_hat = beta_hat;
    r.gamma_hat = gamma_hat;
    r.k_hat = k_hat;
    r.n = n;
    r.log_likelihood = static_cast<double>(n) * std::log(k_hat) +
                       (k_hat - 1.0) * sum_log -
                       static_cast<double>(n) * k_hat * std::log(beta_hat);
    r.notes.push_back("sum_log=" + fmt(sum_log));
    return r;
}

FitResult fit_mmlm(const std::vector<double>& data)
{
    require_valid_sample(data);
    const std::size_t n = data.size();
    double sum = 0.0;
    for (double x : data)
        sum += x;
    const double xbar = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double x : data)
        ss += (x - xbar) * (x - xbar);
    const double s2 = ss / (static_cast<double>(n) - 1.0); // unbiased form
    if (s2 <= 0.0)
        throw DegenerateSampleError("zero sample variance: all observations equal " +
                                    fmt(xbar));
    const double gamma_hat = (-1.0 + std::sqrt(1.0 + xbar * xbar / s2)) / 2.0;
    const double beta_hat = *std::max_element(data.begin(), data.end());
    const double k_hat = 2.0 * gamma_hat;

    FitResult r;
    r.method = Method::mmlm;
    r.beta_hat = beta_hat;
    r.gamma_hat = gamma_hat;
    r.k_hat = k_hat;
    r.n = n;
    r.log_likelihood = support_log_likelihood(data, k_hat, beta_hat).first;
    r.notes.push_back("xbar=" + fmt(xbar));
    r.notes.push_back("s2=" + fmt(s2));
    return r;
}

FitResult fit_percentile(const std::vector<double>& data, double H, double L)
{
    require_valid_sample(data);
    if (!(L > 0.0 && L < H && H < 1.0))
        throw std::domain_error("percentile levels require 0 < L < H < 1");
    const double p_high = sample_quantile(data, H);
    const double p_low = sample_quantile(data, L);
    if (p_high == p_low)
        throw DegenerateSampleError("percentiles collide at " + fmt(p_high) +
                                    "; shape is not identified");
    const double gamma_hat = std::log(H / L) / (2.0 * std::log(p_high / p_low));
    const double beta_hat = p_high / std::pow(H, 1.0 / (2.0 * gamma_hat));
    std::vector<std::string> notes{"P_H=" + fmt(p_high), "P_L=" + fmt(p_low)};
    return finish_percentile_fit(Method::pe, data, gamma_hat, beta_hat,
                                 std::move(notes));
}

FitResult fit_modified_percentile(const std::vector<double>& data, double H)
{
    require_valid_sample(data);
    if (!(H > 0.5 && H < 1.0))
        throw std::domain_error(
            "modified percentile level requires 0.5 < H < 1 (ln(2H) must be positive)");
    const double p_high = sample_quantile(data, H);
    const double median = sample_quantile(data, 0.5);
    if (p_high == median)
        throw DegenerateSampleError("upper percentile equals the median (" +
                                    fmt(median) + "); shape is not identified");
    const double gamma_hat = std::log(2.0 * H) / (2.0 * std::log(p_high / median));
    const double beta_hat = p_high / std::pow(H, 1.0 / (2.0 * gamma_hat));
    std::vector<std::string> notes{"P_H=" + fmt(p_high), "median=" + fmt(median)};
    return finish_percentile_fit(Method::mpe, data, gamma_hat, beta_hat,
                                 std::move(notes));
}

FitResult fit(Method m, const std::vector<double>& data)
{
    switch (m) {
    case Method::mlm: return fit_mle(data);
    case Method::mmlm: return fit_mmlm(data);
    case Method::pe: return fit_percentile(data);
    case Method::mpe: return fit_modified_percentile(data);
    }
    throw std::logic_error("unreachable method");
}

} // namespace powerfam
