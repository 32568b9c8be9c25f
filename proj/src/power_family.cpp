#include "powerfam/power_family.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "powerfam/rng.hpp"

namespace powerfam {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0))
        throw std::domain_error(std::string(name) + " must be strictly positive");
}

} // namespace

std::string origin_name(Origin o)
{
    switch (o) {
    case Origin::pfd: return "pfd";
    case Origin::wpdf: return "wpdf";
    case Origin::mwpdf1: return "mwpdf1";
    case Origin::mwpdf2: return "mwpdf2";
    }
    throw std::logic_error("unreachable origin");
}

Origin origin_from_name(const std::string& name)
{
    if (name == "pfd") return Origin::pfd;
    if (name == "wpdf") return Origin::wpdf;
    if (name == "mwpdf1") return Origin::mwpdf1;
    if (name == "mwpdf2") return Origin::mwpdf2;
    throw std::domain_error("unknown origin '" + name +
                            "' (expected pfd, wpdf, mwpdf1, or mwpdf2)");
}

PowerFamily::PowerFamily(Origin origin, double gamma, double theta, double beta,
                         double k)
    : origin_(origin), gamma_(gamma), theta_(theta), beta_(beta), k_(k)
{
}

PowerFamily PowerFamily::pfd(double gamma, double beta)
{
    require_positive(gamma, "gamma");
    require_positive(beta, "beta");
    return PowerFamily(Origin::pfd, gamma, 0.0, beta, gamma);
}

PowerFamily PowerFamily::wpdf(double gamma, double beta)
{
    require_positive(gamma, "gamma");
    require_positive(beta, "beta");
    return PowerFamily(Origin::wpdf, gamma, 0.0, beta, 2.0 * gamma);
}

PowerFamily PowerFamily::mwpdf1(double gamma, double theta, double beta)
{
    require_positive(gamma, "gamma");
    require_positive(beta, "beta");
    if (theta < 0.0)
        throw std::domain_error("theta must be nonnegative for mwpdf1");
    return PowerFamily(Origin::mwpdf1, gamma, theta, beta, gamma * theta + gamma);
}

PowerFamily PowerFamily::mwpdf2(double gamma, double theta, double beta)
{
    require_positive(gamma, "gamma");
    require_positive(beta, "beta");
    require_positive(theta, "theta"); // theta sits in a denominator
    return PowerFamily(Origin::mwpdf2, gamma, theta, beta, gamma / theta + gamma);
}

double PowerFamily::pdf(double x) const
{
    if (x == 0.0 && k_ < 1.0)
        return std::numeric_limits<double>::infinity();
    if (x <= 0.0 || x >= beta_)
        return 0.0;
    return (k_ / beta_) * std::pow(x / beta_, k_ - 1.0);
}

double PowerFamily::cdf(double x) const
{
    if (x <= 0.0)
        return 0.0;
    if (x >= beta_)
        return 1.0;
    return std::pow(x / beta_, k_);
}

double PowerFamily::hrf(double x) const
{
    if (!(x > 0.0 && x < beta_))
        throw std::domain_error("hrf requires a point strictly inside (0, beta)");
    return pdf(x) / sf(x);
}

double PowerFamily::mills(double x) const
{
    if (!(x > 0.0 && x < beta_))
        throw std::domain_error("mills requires a point strictly inside (0, beta)");
    return 1.0 / hrf(x);
}

double PowerFamily::quantile(double u) const
{
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("quantile level must lie in [0, 1]");
    if (u == 0.0)
        return 0.0;
    if (u == 1.0)
        return beta_;
    return beta_ * std::pow(u, 1.0 / k_);
}

SampleBatch PowerFamily::sample(std::size_t n, std::uint64_t seed) const
{
    if (n == 0)
        throw std::domain_error("sample size must be at least 1");
    rng::Stream stream(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.seeded = true;
    batch.values.reserve(n);
    const double inv_k = 1.0 / k_;
    for (std::size_t i = 0; i < n; ++i)
        batch.values.push_back(beta_ * std::pow(stream.next_unit(), inv_k));
    return batch;
}

PdfShape PowerFamily::pdf_shape() const
{
    if (k_ < 1.0)
        return PdfShape::decreasing;
    if (k_ > 1.0)
        return PdfShape::increasing;
    return PdfShape::flat;
}

HazardShape PowerFamily::hazard_shape() const
{
    if (k_ < 1.0)
        return HazardShape::decreasing;
    if (k_ > 1.0)
        return HazardShape::increasing;
    return HazardShape::constant_like;
}

} // namespace powerfam
