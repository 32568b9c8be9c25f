#ifndef POWERFAM_POWER_FAMILY_HPP
#define POWERFAM_POWER_FAMILY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace powerfam {

// The four constructors of the family. All of them produce the same
// two-parameter law with cdf G(x) = (x/beta)^k on the open support
// (0, beta); they differ only in how the effective exponent k is
// assembled from the constructor's own parameters.
enum class Origin { pfd, wpdf, mwpdf1, mwpdf2 };

enum class PdfShape { decreasing, flat, increasing };
enum class HazardShape { decreasing, constant_like, increasing };

std::string origin_name(Origin o);
Origin origin_from_name(const std::string& name);

// Synthetic or external sample carrier. `seeded` is false for external
// data, in which case `seed` is meaningless.
struct SampleBatch
{
    std::vector<double> values;
    std::uint64_t seed = 0;
    bool seeded = false;
};

// Bounded power-law family: scale beta (right support endpoint) and
// effective cdf exponent k, plus the parameterization that produced k.
// Immutable after construction; every member function is pure.
class PowerFamily
{
  public:
    // Factory per parameterization; each maps its parameters onto k:
    //   pfd:    k = gamma
    //   wpdf:   k = 2*gamma
    //   mwpdf1: k = gamma*theta + gamma   (theta >= 0; theta=0 collapses to pfd)
    //   mwpdf2: k = gamma/theta + gamma   (theta > 0 strictly)
    static PowerFamily pfd(double gamma, double beta);
    static PowerFamily wpdf(double gamma, double beta);
    static PowerFamily mwpdf1(double gamma, double theta, double beta);
    static PowerFamily mwpdf2(double gamma, double theta, double beta);

    double beta() const { return beta_; }
    double k() const { return k_; }
    Origin origin() const { return origin_; }
    double gamma() const { return gamma_; }
    double theta() const { return theta_; } // meaningful for mwpdf1/mwpdf2 only
    bool has_theta() const { return origin_ == Origin::mwpdf1 || origin_ == Origin::mwpdf2; }

    // Density k x^(k-1)/beta^k inside (0,beta), 0 outside. At exactly
    // x=0 with k<1 the density is unbounded and +infinity is returned.
    double pdf(double x) const;

    // Distribution function clamped to [0,1] outside the support.
    double cdf(double x) const;
    double sf(double x) const { return 1.0 - cdf(x); }

    // Hazard rate pdf/sf and its reciprocal (Mills ratio). Both require
    // a strictly interior point: sf has a pole at beta and the hazard is
    // unbounded at 0 when k < 1.
    double hrf(double x) const;
    double mills(double x) const;

    // Inverse cdf beta*u^(1/k) for u in [0,1].
    double quantile(double u) const;

    // n inverse-transform variates from the deterministic stream keyed by
    // `seed`; identical (n, seed) always reproduces the same batch.
    SampleBatch sample(std::size_t n, std::uint64_t seed) const;

    // Monotonicity classes from the sign of k-1 (the density is
    // proportional to x^(k-1); the log-density slope is (k-1)/x, so the
    // same sign also settles the hazard class).
    PdfShape pdf_shape() const;
    HazardShape hazard_shape() const;

  private:
    PowerFamily(Origin origin, double gamma, double theta, double beta, double k);

    Origin origin_;
    double gamma_;
    double theta_;
    double beta_;
    double k_;
};

} // namespace powerfam

#endif
