#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/sgpsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace cyclo;

TEST_CASE("log-gaussian sampler statistics and determinism") {
    auto v = sample_log_gaussian(1000000, 1.0, 12345);
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    // E[ln X_hat] = (ln 2 - gamma)/2 for the 2-dimensional Gaussian radius
    double expect = 0.5 * (std::numbers::ln2 - std::numbers::egamma);
    CHECK(std::abs(mean - expect) < 0.002);

    auto w = sample_log_gaussian(1000000, 1.0, 12345);
    CHECK(v == w);

    // scaling r -> c r shifts every entry by ln c
    auto s = sample_log_gaussian(1000, 3.0, 777);
    auto base = sample_log_gaussian(1000, 1.0, 777);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(s[i] == doctest::Approx(base[i] + std::log(3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(sample_log_gaussian(10, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_log_gaussian(10, -1.0, 1), std::invalid_argument);
}

TEST_CASE("trial success criterion matches the overlap threshold") {
    LogUnitBasis basis(101);
    FastDualTransform fast(basis);
    for (std::uint64_t s = 0; s < 2000; ++s) {
        auto rec = run_trial(fast, 1.0, 10, mix_seed(4242, s));
        CHECK(rec.success == (rec.max_overlap < 0.5));
    }
}

TEST_CASE("success flag does not depend on the lattice translation") {
    LogUnitBasis basis(11);
    FastDualTransform fast(basis);
    const std::size_t n = basis.dim();
    auto logg = sample_log_gaussian(n, 1.0, 555);
    Eigen::VectorXd base(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) base[static_cast<Eigen::Index>(i)] = logg[i];
    Eigen::VectorXd noise_overlaps = fast.overlaps(base);

    for (int variant = 0; variant < 20; ++variant) {
        Eigen::VectorXd coeffs(static_cast<Eigen::Index>(basis.rank()));
        for (Eigen::Index j = 0; j < coeffs.size(); ++j)
            coeffs[j] = static_cast<double>((variant * 7 + j * 3) % 21 - 10);
        Eigen::VectorXd target = fast.combine(coeffs, base);
        Eigen::VectorXd ov = fast.overlaps(target);
        for (Eigen::Index j = 0; j < ov.size(); ++j)
            CHECK(std::abs((ov[j] - coeffs[j]) - noise_overlaps[j]) < 1e-8);
    }
}

TEST_CASE("theoretical bounds at cryptographic scale") {
    auto b = theoretical_bounds(40009);
    CHECK(b.t_new == doctest::Approx(28.68).epsilon(1e-3));
    CHECK(b.alpha_new == doctest::Approx(0.9763).epsilon(1e-3));
    CHECK(b.t_old == doctest::Approx(6.92).epsilon(1e-2));
    CHECK(b.alpha_old < 0.0);
    CHECK_THROWS_AS(theoretical_bounds(3), std::invalid_argument);

    // zeta(4)/zeta(2) = pi^2/15, so t_new = pi sqrt(q) / (4 sqrt 30)
    double q = 40009.0;
    double direct = std::numbers::pi * std::sqrt(q) / (4.0 * std::sqrt(30.0));
    CHECK(b.t_new == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("small-q recovery rate is scale free") {
    // The overlap distribution does not depend on the Gaussian scale: the
    // scale only shifts Log g along the all-1 direction, which the duals
    // are orthogonal to.
    auto tiny = run_experiment(5, 0.01, 200, 9);
    auto unit = run_experiment(5, 1.0, 200, 9);
    CHECK(tiny.successes == unit.successes);
    CHECK(tiny.successes > 0);
    CHECK(tiny.successes < 200);
}

TEST_CASE("experiment reports are deterministic and scheduling independent") {
    auto a = run_experiment(101, 1.0, 64, 31337, 10, 1);
    auto b = run_experiment(101, 1.0, 64, 31337, 10, 3);
    CHECK(experiment_to_json(a) == experiment_to_json(b));
}

TEST_CASE("success rate is invariant under scaling r") {
    auto a = run_experiment(101, 1.0, 400, 2024);
    auto b = run_experiment(101, 2.0, 400, 2024);
    // ln X_hat shifts by a constant in the all-1 direction; duals ignore it
    CHECK(a.successes == b.successes);
    CHECK(a.empirical_rate > 0.0);
    CHECK(a.empirical_rate < 1.0);   // bound is vacuous at q=101, noise bites
}

TEST_CASE("tail bound Monte Carlo") {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(500);
    d[0] = 1.0 / std::numbers::sqrt2;
    d[1] = -1.0 / std::numbers::sqrt2;

    auto rep = tail_check(500, {d}, 1.0, 6.0, 20000, 99);
    CHECK(!rep.vacuous);
    CHECK(rep.bound == doctest::Approx(2.0 * std::exp(-3.0)).epsilon(1e-12));
    double slack = 3.0 * std::sqrt(rep.bound * (1.0 - rep.bound) / 20000.0);
    CHECK(rep.empirical <= rep.bound + slack);

    // duplicated directions double the bound, not the event
    auto dup = tail_check(500, {d, d}, 1.0, 6.0, 20000, 99);
    CHECK(dup.bound == doctest::Approx(2.0 * rep.bound).epsilon(1e-12));
    CHECK(dup.exceed == rep.exceed);

    // small t makes the bound vacuous
    auto vac = tail_check(10, {Eigen::VectorXd::Zero(10)}, 1.0, 0.5, 10, 3);
    CHECK(vac.vacuous);

    CHECK_THROWS_AS(tail_check(500, {d}, 1.0, 0.0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(tail_check(10, {d}, 1.0, 6.0, 10, 1), std::invalid_argument);
}

TEST_CASE("seed mixing separates indices") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
}

TEST_CASE("report serialisation carries the configuration") {
    auto rep = run_experiment(5, 0.01, 10, 3, 10, 1, true);
    auto json = experiment_to_json(rep);
    CHECK(json.find("\"config\":{\"q\":5") != std::string::npos);
    CHECK(json.find("alpha_new") != std::string::npos);
    CHECK(json.find("C_r") != std::string::npos);
    auto csv = experiment_to_csv(rep);
    CHECK(csv.rfind("trial,seed,success,max_overlap\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
}
