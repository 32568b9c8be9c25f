#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "powerfam/data_io.hpp"
#include "powerfam/model_lab.hpp"
#include "powerfam/power_family.hpp"

using namespace powerfam;

TEST_CASE("bundled datasets carry the expected values")
{
    const Dataset chemo = builtin_dataset("chemotherapy");
    CHECK(chemo.name == "chemotherapy");
    REQUIRE(chemo.values.size() == 45);
    long long millis = 0;
    for (double x : chemo.values) {
        CHECK(x > 0.0);
        millis += std::llround(x * 1000.0);
    }
    CHECK(millis == 60365);
    CHECK(*std::max_element(chemo.values.begin(), chemo.values.end()) == 4.033);
    CHECK_FALSE(chemo.source_note.empty());

    const Dataset dev = builtin_dataset("devices");
    CHECK(dev.name == "devices");
    REQUIRE(dev.values.size() == 30);
    double sum = 0.0;
    int capped = 0;
    for (double x : dev.values) {
        CHECK(x > 0.0);
        sum += x;
        if (x == 300.0)
            ++capped;
    }
    CHECK(sum == 5311.0);
    CHECK(capped == 8);
    CHECK(*std::min_element(dev.values.begin(), dev.values.end()) == 2.0);
    CHECK_FALSE(dev.source_note.empty());

    CHECK_THROWS_AS(builtin_dataset("nope"), std::domain_error);
}

TEST_CASE("shipped data files mirror the embedded datasets")
{
    const auto chemo_file =
        read_values_file(POWERFAM_DATA_DIR "/chemotherapy.txt");
    const auto chemo = builtin_dataset("chemotherapy").values;
    REQUIRE(chemo_file.size() == chemo.size());
    for (std::size_t i = 0; i < chemo.size(); ++i)
        CHECK(chemo_file[i] == chemo[i]);

    const auto dev_file = read_values_file(POWERFAM_DATA_DIR "/devices.txt");
    const auto dev = builtin_dataset("devices").values;
    REQUIRE(dev_file.size() == dev.size());
    for (std::size_t i = 0; i < dev.size(); ++i)
        CHECK(dev_file[i] == dev[i]);
}

TEST_CASE("log-likelihood closed form and support accounting")
{
    const PowerFamily f = PowerFamily::pfd(2.0, 2.0);
    const LogLik ll = log_likelihood(f, {0.5, 1.0});
    CHECK(ll.out_of_support == 0);
    CHECK(ll.value == doctest::Approx(-3.0 * std::log(2.0)).epsilon(1e-14));

    // The endpoint itself is inside the support.
    CHECK(std::isfinite(log_likelihood(f, {2.0, 1.0}).value));

    const LogLik bad = log_likelihood(f, {0.5, 3.0});
    CHECK(bad.out_of_support == 1);
    CHECK(std::isinf(bad.value));
    CHECK(bad.value < 0.0);

    const LogLik worse = log_likelihood(f, {-1.0, 0.0, 2.5, 1.0});
    CHECK(worse.out_of_support == 3);

    CHECK_THROWS_AS(log_likelihood(f, {}), std::domain_error);
}

TEST_CASE("information criteria: frozen anchors and the small-n collapse")
{
    const InfoCriteria ic = info_criteria(-10.0, 2, 20);
    CHECK(ic.aic == doctest::Approx(24.0).epsilon(1e-15));
    CHECK(ic.caic == doctest::Approx(24.705882352941176).epsilon(1e-14));
    CHECK(ic.bic == doctest::Approx(25.991464547107982).epsilon(1e-14));
    CHECK(ic.hqic == doctest::Approx(24.388754801459795).epsilon(1e-14));

    // With n <= p+1 the corrected criterion has no meaning.
    CHECK(std::isnan(info_criteria(-10.0, 2, 3).caic));
    CHECK_FALSE(std::isnan(info_criteria(-10.0, 2, 4).caic));

    CHECK_THROWS_AS(info_criteria(-10.0, -1, 20), std::domain_error);
    CHECK_THROWS_AS(info_criteria(-10.0, 2, 0), std::domain_error);
}

TEST_CASE("chemotherapy fit: frozen anchors across all parameterizations")
{
    const auto data = builtin_dataset("chemotherapy").values;
    const auto reports = compare_models(
        data, {ModelKind::mwpdf1, ModelKind::wpdf, ModelKind::pfd,
               ModelKind::mwpdf2});
    REQUIRE(reports.size() == 4);

    // Two-parameter forms rank first on aic; ties keep input order.
    CHECK(reports[0].model == ModelKind::wpdf);
    CHECK(reports[1].model == ModelKind::pfd);
    CHECK(reports[2].model == ModelKind::mwpdf1);
    CHECK(reports[3].model == ModelKind::mwpdf2);

    for (const ModelReport& r : reports) {
        CHECK_FALSE(r.failed);
        CHECK(r.beta_hat == 4.033);
        CHECK(r.k_hat ==
              doctest::Approx(0.61747884021017609).epsilon(1e-13));
        CHECK(r.log_likelihood ==
              doctest::Approx(-56.570953528875807).epsilon(1e-12));
    }

    CHECK(reports[0].gamma_hat ==
          doctest::Approx(0.30873942010508804).epsilon(1e-13));
    CHECK(reports[1].gamma_hat == reports[1].k_hat); // plain form: gamma = k
    CHECK(reports[0].num_params == 2);
    CHECK(reports[2].num_params == 3);
    CHECK(reports[2].theta_hat == 1.0);
    CHECK(reports[2].has_theta);
    CHECK_FALSE(reports[0].has_theta);
    CHECK_FALSE(reports[2].note.empty());

    CHECK(reports[0].ic.aic ==
          doctest::Approx(117.14190705775161).epsilon(1e-12));
    CHECK(reports[0].ic.caic ==
          doctest::Approx(117.4276213434659).epsilon(1e-12));
    CHECK(reports[0].ic.bic ==
          doctest::Approx(120.75523203729225).epsilon(1e-12));
    CHECK(reports[0].ic.hqic ==
          doctest::Approx(118.48891833095529).epsilon(1e-12));

    // The extra parameter costs exactly 2 on aic and shifts nothing else
    // in the shared likelihood.
    CHECK(reports[2].ic.aic - reports[0].ic.aic ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(reports[2].ic.aic ==
          doctest::Approx(119.14190705775161).epsilon(1e-12));
    CHECK(reports[2].ic.caic ==
          doctest::Approx(119.72727291141015).epsilon(1e-12));
}

TEST_CASE("devices fit: frozen anchors")
{
    const auto data = builtin_dataset("devices").values;
    const auto reports = compare_models(data, {ModelKind::wpdf});
    REQUIRE(reports.size() == 1);
    const ModelReport& r = reports[0];
    CHECK(r.beta_hat == 300.0);
    CHECK(r.k_hat == doctest::Approx(0.99655545301009912).epsilon(1e-13));
    CHECK(r.log_likelihood ==
          doctest::Approx(-171.11329544556302).epsilon(1e-12));
    CHECK(r.ic.aic == doctest::Approx(346.22659089112605).epsilon(1e-12));
    CHECK(r.ic.caic == doctest::Approx(346.67103533557049).epsilon(1e-12));
    CHECK(r.ic.bic == doctest::Approx(349.02898565445036).epsilon(1e-12));
    CHECK(r.ic.hqic == doctest::Approx(347.12310105393222).epsilon(1e-12));
}

TEST_CASE("model comparison flags unfittable data without throwing")
{
    const std::vector<double> flat = {2.0, 2.0, 2.0};
    const auto reports =
        compare_models(flat, {ModelKind::wpdf, ModelKind::pfd});
    REQUIRE(reports.size() == 2);
    for (const ModelReport& r : reports) {
        CHECK(r.failed);
        CHECK_FALSE(r.note.empty());
    }

    CHECK_THROWS_AS(compare_models({}, {ModelKind::wpdf}), std::domain_error);
    CHECK_THROWS_AS(compare_models({1.0, 2.0}, {}), std::domain_error);
}

TEST_CASE("model kind names round-trip")
{
    for (ModelKind m : {ModelKind::wpdf, ModelKind::pfd, ModelKind::mwpdf1,
                        ModelKind::mwpdf2})
        CHECK(model_kind_from_name(model_kind_name(m)) == m);
    CHECK_THROWS_AS(model_kind_from_name("weird"), std::domain_error);
}

TEST_CASE("total-time-on-test transform: exact small case")
{
    const auto pts = ttt_transform({5.0, 3.0, 1.0, 2.0, 4.0});
    REQUIRE(pts.size() == 5);
    const double want_u[] = {0.2, 0.4, 0.6, 0.8, 1.0};
    const double want_t[] = {1.0 / 3.0, 0.6, 0.8, 14.0 / 15.0, 1.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].first == doctest::Approx(want_u[i]).epsilon(1e-15));
        CHECK(pts[i].second == doctest::Approx(want_t[i]).epsilon(1e-15));
    }
    CHECK(pts.back().second == 1.0); // exactly, by construction
}

TEST_CASE("total-time-on-test transform: devices anchors and invariances")
{
    const auto data = builtin_dataset("devices").values;
    const auto pts = ttt_transform(data);
    REQUIRE(pts.size() == 30);
    CHECK(pts[4].second ==
          doctest::Approx(0.12163434381472416).epsilon(1e-14));
    CHECK(pts[9].second ==
          doctest::Approx(0.39954810770099793).epsilon(1e-14));
    CHECK(pts[19].second ==
          doctest::Approx(0.94200715496140087).epsilon(1e-14));
    CHECK(pts[29].second == 1.0);

    // Nondecreasing in u, values within [0, 1].
    double prev = 0.0;
    for (const auto& [u, t] : pts) {
        CHECK(t >= prev);
        CHECK(t <= 1.0);
        prev = t;
    }

    // The transform sorts internally: input order is irrelevant.
    std::vector<double> shuffled(data);
    std::mt19937 rng(17);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto pts2 = ttt_transform(shuffled);
    REQUIRE(pts2.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts2[i].first == pts[i].first);
        CHECK(pts2[i].second == pts[i].second);
    }

    // Scale invariance up to rounding.
    std::vector<double> scaled(data);
    for (double& x : scaled)
        x *= 3.0;
    const auto pts3 = ttt_transform(scaled);
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(pts3[i].second ==
              doctest::Approx(pts[i].second).epsilon(1e-14));

    CHECK_THROWS_AS(ttt_transform({}), std::domain_error);
    CHECK_THROWS_AS(ttt_transform({1.0, -2.0}), std::domain_error);
    CHECK_THROWS_AS(ttt_transform({0.0, 1.0}), std::domain_error);
}
