#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "powerfam/power_family.hpp"
#include "quad_oracle.hpp"

using powerfam::Origin;
using powerfam::PowerFamily;

namespace {

const double kGrid[] = {0.5, 1.0, 2.0, 4.0, 7.0};
const double betaGrid[] = {0.5, 1.0, 3.0};

PowerFamily by_k(double k, double beta)
{
    return PowerFamily::pfd(k, beta); // pfd exposes the exponent directly
}

} // namespace

TEST_CASE("origin parameterizations map onto the effective exponent")
{
    CHECK(PowerFamily::wpdf(2.0, 1.0).k() == 4.0);
    CHECK(PowerFamily::pfd(3.5, 2.0).k() == 3.5);
    // theta = 0 collapses the first modification onto the plain power law
    CHECK(PowerFamily::mwpdf1(1.0, 0.0, 1.0).k() == 1.0);
    // theta = 1 makes the second modification coincide with the doubled form
    CHECK(PowerFamily::mwpdf2(1.0, 1.0, 2.0).k() == 2.0);
    CHECK(PowerFamily::mwpdf2(1.0, 1.0, 2.0).k() == PowerFamily::wpdf(1.0, 2.0).k());
    CHECK(PowerFamily::mwpdf1(1.5, 2.0, 1.0).k() == doctest::Approx(4.5).epsilon(1e-15));
}

TEST_CASE("constructors reject bad parameters by name")
{
    CHECK_THROWS_WITH_AS(PowerFamily::wpdf(0.0, 1.0),
                         doctest::Contains("gamma"), std::domain_error);
    CHECK_THROWS_WITH_AS(PowerFamily::wpdf(1.0, -2.0),
                         doctest::Contains("beta"), std::domain_error);
    CHECK_THROWS_WITH_AS(PowerFamily::mwpdf2(1.0, 0.0, 1.0),
                         doctest::Contains("theta"), std::domain_error);
    CHECK_THROWS_AS(PowerFamily::mwpdf1(1.0, -0.5, 1.0), std::domain_error);
    CHECK_NOTHROW(PowerFamily::mwpdf1(1.0, 0.0, 1.0));
}

TEST_CASE("pdf values and support conventions")
{
    const PowerFamily uniform = PowerFamily::wpdf(0.5, 1.0); // k = 1
    CHECK(uniform.pdf(0.7) == doctest::Approx(1.0).epsilon(1e-15));

    const PowerFamily f = PowerFamily::wpdf(1.0, 2.0); // k = 2
    CHECK(f.pdf(1.0) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK(f.pdf(-1.0) == 0.0);
    CHECK(f.pdf(2.0) == 0.0);
    CHECK(f.pdf(2.5) == 0.0);
    CHECK(f.pdf(0.0) == 0.0);

    const PowerFamily singular = by_k(0.5, 1.0);
    CHECK(std::isinf(singular.pdf(0.0)));
    CHECK(singular.pdf(0.0) > 0.0);
}

TEST_CASE("cdf, survival, hazard, and Mills ratio")
{
    const PowerFamily uniform = by_k(1.0, 1.0);
    CHECK(uniform.cdf(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(uniform.sf(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(uniform.hrf(0.5) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(uniform.mills(0.5) == doctest::Approx(0.5).epsilon(1e-15));

    const PowerFamily f = by_k(2.0, 2.0);
    CHECK(f.cdf(1.0) == doctest::Approx(0.25).epsilon(1e-15));

    CHECK(f.cdf(2.0) == 1.0);
    CHECK(f.sf(2.0) == 0.0);
    CHECK(f.cdf(-3.0) == 0.0);
    CHECK(f.cdf(5.0) == 1.0);

    CHECK_THROWS_AS(f.hrf(2.0), std::domain_error);
    CHECK_THROWS_AS(f.hrf(2.7), std::domain_error);
    CHECK_THROWS_AS(f.mills(0.0), std::domain_error);
    CHECK_THROWS_AS(f.hrf(-0.1), std::domain_error);
}

TEST_CASE("hazard times Mills ratio is 1 and sf complements cdf exactly")
{
    for (double k : kGrid)
        for (double beta : betaGrid) {
            const PowerFamily f = by_k(k, beta);
            for (int i = 1; i <= 19; ++i) {
                const double x = beta * i / 20.0;
                CHECK(f.hrf(x) * f.mills(x) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(f.sf(x) + f.cdf(x) == 1.0); // exact complement
            }
        }
}

TEST_CASE("quantile closed form and round trip")
{
    const PowerFamily uniform = by_k(1.0, 1.0);
    CHECK(uniform.quantile(0.25) == doctest::Approx(0.25).epsilon(1e-15));

    const PowerFamily w = PowerFamily::wpdf(2.0, 1.0);
    CHECK(w.quantile(0.75) == doctest::Approx(0.9306048591020996).epsilon(1e-15));

    for (double k : kGrid)
        for (double beta : betaGrid) {
            const PowerFamily f = by_k(k, beta);
            CHECK(f.quantile(0.0) == 0.0);
            CHECK(f.quantile(1.0) == beta);
            for (double u : {0.0, 0.01, 0.25, 0.5, 0.75, 0.99, 1.0})
                CHECK(f.cdf(f.quantile(u)) == doctest::Approx(u).epsilon(1e-12));
        }

    CHECK_THROWS_AS(w.quantile(-0.01), std::domain_error);
    CHECK_THROWS_AS(w.quantile(1.01), std::domain_error);
}

TEST_CASE("doubled and plain parameterizations are the same law")
{
    for (double gamma : {0.25, 1.0, 3.5})
        for (double beta : betaGrid) {
            const PowerFamily w = PowerFamily::wpdf(gamma, beta);
            const PowerFamily p = PowerFamily::pfd(2.0 * gamma, beta);
            CHECK(w.k() == p.k());
            for (int i = 1; i <= 9; ++i) {
                const double x = beta * i / 10.0;
                CHECK(w.pdf(x) == p.pdf(x));
                CHECK(w.cdf(x) == p.cdf(x));
                CHECK(w.quantile(i / 10.0) == p.quantile(i / 10.0));
            }
        }
}

TEST_CASE("cdf is nondecreasing on a dense grid")
{
    for (double k : kGrid) {
        const PowerFamily f = by_k(k, 3.0);
        double prev = -1.0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = -0.5 + 4.0 * i / 1000.0; // crosses both endpoints
            const double c = f.cdf(x);
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("pdf integrates to 1 over the support")
{
    for (double k : kGrid)
        for (double beta : betaGrid) {
            const PowerFamily f = by_k(k, beta);
            const double integral =
                quad::integrate([&](double x) { return f.pdf(x); }, 0.0, beta);
            CHECK(integral == doctest::Approx(1.0).epsilon(1e-9));
        }
}

TEST_CASE("sampling is deterministic in the seed")
{
    const PowerFamily f = PowerFamily::wpdf(2.0, 1.0);
    const auto a = f.sample(64, 7);
    const auto b = f.sample(64, 7);
    REQUIRE(a.values.size() == 64);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == b.values[i]);

    const auto c = f.sample(64, 8);
    bool any_different = false;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        any_different = any_different || (c.values[i] != a.values[i]);
    CHECK(any_different);

    CHECK(a.seeded);
    CHECK(a.seed == 7);
    CHECK_THROWS_AS(f.sample(0, 1), std::domain_error);
}

TEST_CASE("uniform member samples raw unit variates")
{
    const PowerFamily uniform = by_k(1.0, 1.0);
    const auto batch = uniform.sample(1000, 99);
    for (double v : batch.values) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("empirical cdf of large samples passes a Kolmogorov-Smirnov check")
{
    // 1% critical value of the asymptotic Kolmogorov statistic.
    const double k_alpha = 1.627623612;
    const std::size_t n = 100000;
    const double threshold = k_alpha / std::sqrt(static_cast<double>(n));
    int family_index = 0;
    for (const PowerFamily& f :
         {PowerFamily::wpdf(1.0, 1.0), PowerFamily::pfd(0.5, 3.0)}) {
        auto values = f.sample(n, 1234 + static_cast<std::uint64_t>(family_index++)).values;
        std::sort(values.begin(), values.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = f.cdf(values[i]);
            d = std::max(d, std::fabs(c - static_cast<double>(i) / n));
            d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - c));
        }
        CHECK(d < threshold);
    }
}

TEST_CASE("shape classes follow the sign of k-1")
{
    using powerfam::HazardShape;
    using powerfam::PdfShape;
    CHECK(by_k(0.5, 1.0).pdf_shape() == PdfShape::decreasing);
    CHECK(by_k(1.0, 2.0).pdf_shape() == PdfShape::flat);
    CHECK(PowerFamily::wpdf(2.0, 1.0).pdf_shape() == PdfShape::increasing);

    CHECK(PowerFamily::wpdf(2.0, 1.0).hazard_shape() == HazardShape::increasing);
    CHECK(by_k(0.5, 1.0).hazard_shape() == HazardShape::decreasing);
    CHECK(by_k(1.0, 1.0).hazard_shape() == HazardShape::constant_like);
}

TEST_CASE("hazard classification agrees with finite differences")
{
    // k > 1: the hazard rises on the whole interior.
    for (double k : {2.0, 4.0, 7.0})
        for (double beta : betaGrid) {
            const PowerFamily f = by_k(k, beta);
            REQUIRE(f.hazard_shape() == powerfam::HazardShape::increasing);
            double prev = f.hrf(beta * 1e-3);
            for (int i = 1; i <= 100; ++i) {
                const double x = beta * (0.001 + 0.997 * i / 100.0);
                const double h = f.hrf(x);
                CHECK(h > prev);
                prev = h;
            }
        }

    // k < 1: the density pole dominates near 0, so the hazard falls there;
    // on bounded support it must eventually turn up toward the sf pole at
    // beta. The decreasing stretch ends at beta*(1-k)^(1/k).
    for (double k : {0.5, 0.8})
        for (double beta : betaGrid) {
            const PowerFamily f = by_k(k, beta);
            REQUIRE(f.hazard_shape() == powerfam::HazardShape::decreasing);
            const double turn = beta * std::pow(1.0 - k, 1.0 / k);
            double prev = f.hrf(turn * 1e-4);
            for (int i = 1; i <= 100; ++i) {
                const double x = turn * (1e-4 + (1.0 - 2e-4) * i / 100.0);
                const double h = f.hrf(x);
                CHECK(h < prev);
                prev = h;
            }
        }

    // k = 1: the log-density slope is identically zero (flat density), the
    // signature of the constant-like class; the raw hazard on a bounded
    // support still rises like 1/(beta-x).
    for (double beta : betaGrid) {
        const PowerFamily f = by_k(1.0, beta);
        REQUIRE(f.hazard_shape() == powerfam::HazardShape::constant_like);
        const double inner = f.pdf(beta * 0.25);
        for (int i = 1; i <= 100; ++i) {
            const double x = beta * (0.001 + 0.997 * i / 100.0);
            CHECK(f.pdf(x) == inner); // zero log-density slope, exactly
            CHECK(f.hrf(x) ==
                  doctest::Approx(1.0 / (beta - x)).epsilon(1e-12));
        }
    }
}
