#include "powerfam/properties.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace powerfam {

namespace {

void require_moment_order(int r)
{
    if (r < 1)
        throw std::domain_error("moment order r must be at least 1");
}

} // namespace

double raw_moment(const PowerFamily& f, int r)
{
    require_moment_order(r);
    const double k = f.k();
    return k * std::pow(f.beta(), r) / (r + k);
}

double inverse_moment(const PowerFamily& f, int r)
{
    require_moment_order(r);
    const double k = f.k();
    if (!(k > r))
        throw std::domain_error("inverse moment of order " + std::to_string(r) +
                                " diverges unless k > r (k = " + std::to_string(k) +
                                ")");
    return k * std::pow(f.beta(), -r) / (k - r);
}

double mean(const PowerFamily& f)
{
    const double k = f.k();
    return k * f.beta() / (k + 1.0);
}

double variance(const PowerFamily& f)
{
    const double k = f.k();
    const double b = f.beta();
    return k * b * b / ((k + 1.0) * (k + 1.0) * (k + 2.0));
}

double cv(const PowerFamily& f)
{
    const double k = f.k();
    return 1.0 / std::sqrt(k * (k + 2.0));
}

double incomplete_moment(const PowerFamily& f, int r, double p)
{
    require_moment_order(r);
    if (!(p > 0.0 && p <= f.beta()))
        throw std::domain_error("incomplete moment endpoint must lie in (0, beta]");
    const double k = f.k();
    // (k/beta^k) p^(r+k)/(r+k), written with the bounded ratio p/beta.
    return k * std::pow(p / f.beta(), k) * std::pow(p, r) / (r + k);
}

double upper_incomplete_moment(const PowerFamily& f, int r, double t)
{
    require_moment_order(r);
    if (!(t >= 0.0 && t < f.beta()))
        throw std::domain_error("truncation point must lie in [0, beta)");
    const double k = f.k();
    const double head =
        t == 0.0 ? 0.0 : std::pow(t / f.beta(), k) * std::pow(t, r);
    return k * (std::pow(f.beta(), r) - head) / (r + k);
}

double conditional_moment(const PowerFamily& f, int r, double t)
{
    return upper_incomplete_moment(f, r, t) / f.sf(t);
}

SeriesResult mgf(const PowerFamily& f, double t, const SeriesControl& ctl)
{
    if (ctl.max_terms < 1 || !(ctl.rel_tol > 0.0))
        throw std::domain_error("series control requires max_terms >= 1 and rel_tol > 0");
    const double k = f.k();
    const double tb = t * f.beta();
    SeriesResult res;
    res.value = 1.0;
    double power_over_fact = 1.0; // (t*beta)^r / r!, updated incrementally
    for (int r = 1; r <= ctl.max_terms; ++r) {
        power_over_fact *= tb / r;
        const double term = power_over_fact / (static_cast<double>(r) / k + 1.0);
        res.value += term;
        res.terms = r;
        if (std::abs(term) < ctl.rel_tol * std::abs(res.value)) {
            res.converged = true;
            break;
        }
    }
    return res;
}

double mrf(const PowerFamily& f, double x)
{
    if (!(x >= 0.0 && x < f.beta()))
        throw std::domain_error("mean residual life requires x in [0, beta)");
    const double k = f.k();
    const double b = f.beta();
    // (beta^(k+1) - x^(k+1)) / ((k+1) beta^k) via the bounded ratio x/beta.
    const double tail = (b - std::pow(x / b, k) * x) / (k + 1.0);
    return ((b - x) - tail) / f.sf(x);
}

double vitality(const PowerFamily& f, double x)
{
    if (!(x >= 0.0 && x < f.beta()))
        throw std::domain_error("vitality requires x in [0, beta)");
    const double k = f.k();
    const double b = f.beta();
    return k * (b - std::pow(x / b, k) * x) / ((k + 1.0) * f.sf(x));
}

namespace {

// Convergence guard shared by the entropy-family quantities: the integral
// of pdf^s over (0,beta) is finite iff s(k-1)+1 > 0.
double entropy_exponent(const PowerFamily& f, double s)
{
    const double a = s * (f.k() - 1.0) + 1.0;
    if (!(a > 0.0))
        throw std::domain_error("integral of pdf^s diverges: s(k-1)+1 <= 0");
    return a;
}

} // namespace

double renyi_entropy(const PowerFamily& f, double s)
{
    if (!(s > 0.0))
        throw std::domain_error("entropy order s must be strictly positive");
    if (s == 1.0)
        throw std::domain_error("order s=1 is the Shannon limit; call shannon_entropy");
    const double a = entropy_exponent(f, s);
    const double k = f.k();
    const double lb = std::log(f.beta());
    const double log_integral = s * (std::log(k) - k * lb) + a * lb - std::log(a);
    return log_integral / (1.0 - s);
}

double shannon_entropy(const PowerFamily& f)
{
    const double k = f.k();
    // -E[log pdf] = -log k + log beta + (k-1)/k.
    return -std::log(k) + std::log(f.beta()) + (k - 1.0) / k;
}

double information_fn(const PowerFamily& f, double s)
{
    if (!(s > 0.0))
        throw std::domain_error("information order s must be strictly positive");
    const double a = entropy_exponent(f, s);
    const double k = f.k();
    const double lb = std::log(f.beta());
    return std::exp(s * (std::log(k) - k * lb) + a * lb) / a;
}

double order_stat_pdf(const PowerFamily& f, int j, int n, double x)
{
    if (n < 1 || j < 1 || j > n)
        throw std::domain_error("order statistic index requires 1 <= j <= n");
    const double g = f.pdf(x);
    if (g == 0.0)
        return 0.0;
    const double F = f.cdf(x);
    const double S = 1.0 - F;
    const double log_prefactor =
        std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(j)) -
        std::lgamma(static_cast<double>(n - j) + 1.0);
    double log_terms = 0.0;
    if (j > 1)
        log_terms += (j - 1.0) * std::log(F);
    if (j < n)
        log_terms += (n - static_cast<double>(j)) * std::log(S);
    return std::exp(log_prefactor + log_terms) * g;
}

double lorenz(const PowerFamily& f, double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("lorenz level must lie in [0, 1]");
    if (p == 0.0)
        return 0.0;
    const double k = f.k();
    const double q = f.quantile(p);
    // k q^(k+1) / (mean beta^k (k+1)) with q^(k+1)/beta^k kept as a ratio.
    return k * std::pow(q / f.beta(), k) * q / (mean(f) * (k + 1.0));
}

double bonferroni(const PowerFamily& f, double p)
{
    if (!(p > 0.0 && p <= 1.0))
        throw std::domain_error("bonferroni level must lie in (0, 1]");
    return lorenz(f, p) / p;
}

double dtm(const PowerFamily& f, double x, double y)
{
    if (!(x >= 0.0 && x < y && y <= f.beta()))
        throw std::domain_error("doubly truncated mean requires 0 <= x < y <= beta");
    const double k = f.k();
    const double b = f.beta();
    const double upper = std::pow(y / b, k);
    const double lower = x == 0.0 ? 0.0 : std::pow(x / b, k);
    return k * (upper * y - lower * x) / ((k + 1.0) * (upper - lower));
}

} // namespace powerfam
