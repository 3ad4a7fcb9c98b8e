#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/lfun.hpp"
#include "cyclo/unitlat.hpp"

#include <cmath>
#include <random>

using namespace cyclo;

namespace {
const double kLnGolden = std::log((1.0 + std::sqrt(5.0)) / 2.0);
}

TEST_CASE("basis construction") {
    LogUnitBasis b5(5);
    CHECK(b5.dim() == 2);
    CHECK(b5.rank() == 1);
    auto row = b5.row(2);
    CHECK(row[0] == doctest::Approx(kLnGolden).epsilon(1e-12));
    CHECK(row[1] == doctest::Approx(-kLnGolden).epsilon(1e-12));
    CHECK(std::abs(row.sum()) < 1e-12);

    LogUnitBasis b3(3);
    CHECK(b3.rank() == 0);

    CHECK_THROWS_AS(LogUnitBasis(9), std::invalid_argument);
}

TEST_CASE("every row sums to zero") {
    for (std::uint32_t q : {5u, 7u, 11u, 101u, 503u}) {
        LogUnitBasis basis(q);
        for (std::uint32_t j = 2; j <= basis.dim(); ++j)
            CHECK(std::abs(basis.row(j).sum()) < 1e-10);
    }
}

TEST_CASE("direct dual in the one-dimensional case") {
    LogUnitBasis b5(5);
    auto dual = dual_direct(b5);
    CHECK(dual.nu == doctest::Approx(1.0 / (2.0 * kLnGolden * kLnGolden)).epsilon(1e-12));
    CHECK(dual.vectors(0, 0) == doctest::Approx(1.0 / (2.0 * kLnGolden)).epsilon(1e-12));
    CHECK(dual.vectors(1, 0) == doctest::Approx(-1.0 / (2.0 * kLnGolden)).epsilon(1e-12));
    CHECK_THROWS_AS(dual_direct(LogUnitBasis(3)), std::invalid_argument);
}

TEST_CASE("dual vectors: equal norms, biorthogonality, orthogonal to all-1") {
    for (std::uint32_t q : {7u, 11u, 101u}) {
        LogUnitBasis basis(q);
        auto dual = dual_direct(basis);
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(basis.dim()));
        double nu0 = dual.vectors.col(0).squaredNorm();
        for (Eigen::Index c = 0; c < dual.vectors.cols(); ++c) {
            double nu = dual.vectors.col(c).squaredNorm();
            CHECK(std::abs(nu - nu0) <= 1e-9 * nu0);
            CHECK(std::abs(dual.vectors.col(c).dot(ones)) < 1e-9);
        }
        for (std::uint32_t j = 2; j <= basis.dim(); ++j) {
            auto bj = basis.row(j);
            for (std::uint32_t jp = 2; jp <= basis.dim(); ++jp) {
                double ip = dual.vectors.col(jp - 2).dot(bj);
                CHECK(std::abs(ip - (j == jp ? 1.0 : 0.0)) < 1e-8);
            }
        }
    }
}

TEST_CASE("dual norm via L matches the direct route") {
    for (std::uint32_t q : {5u, 7u, 11u, 101u}) {
        auto rep = dual_norm_report(q);
        REQUIRE(rep.has_direct);
        CHECK(std::abs(rep.nu_direct - rep.nu_via_L) <= 1e-8 * rep.nu_via_L);
    }
    CharacterGroup g5(5);
    double expected = 1.0 / (2.0 * kLnGolden * kLnGolden);
    CHECK(dual_norm_via_L(l1_table(g5)) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("Babai round-off on the one-dimensional lattice") {
    LogUnitBasis b5(5);
    auto dual = dual_direct(b5);
    Eigen::VectorXd b2 = b5.row(2);

    auto a = babai_decode(dual, 3.0 * b2);
    CHECK(a == std::vector<std::int64_t>{3});

    Eigen::VectorXd noise(2);
    noise << 0.1, -0.1;
    double overlap = dual.vectors.col(0).dot(noise);
    CHECK(overlap == doctest::Approx(0.2078).epsilon(1e-3));
    CHECK(babai_decode(dual, 3.0 * b2 + noise) == std::vector<std::int64_t>{3});

    noise << 0.3, -0.3;
    CHECK(dual.vectors.col(0).dot(noise) == doctest::Approx(0.6234).epsilon(1e-3));
    CHECK(babai_decode(dual, 3.0 * b2 + noise) == std::vector<std::int64_t>{4});

    Eigen::VectorXd wrong(3);
    CHECK_THROWS_AS(babai_decode(dual, wrong), std::invalid_argument);
}

TEST_CASE("round-off recovers random lattice points exactly") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coeff(-10, 10);
    for (std::uint32_t q : {5u, 11u, 101u}) {
        LogUnitBasis basis(q);
        auto dual = dual_direct(basis);
        const std::size_t rank = basis.rank();
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::VectorXd target = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.dim()));
            std::vector<std::int64_t> a(rank);
            for (std::uint32_t j = 2; j <= basis.dim(); ++j) {
                a[j - 2] = coeff(rng);
                target += static_cast<double>(a[j - 2]) * basis.row(j);
            }
            CHECK(babai_decode(dual, target) == a);
        }
    }
}

TEST_CASE("decoding is translation invariant") {
    LogUnitBasis basis(11);
    auto dual = dual_direct(basis);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-0.2, 0.2);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXd t(static_cast<Eigen::Index>(basis.dim()));
        for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = u(rng);
        Eigen::VectorXd shifted = t + 2.0 * basis.row(2) - 3.0 * basis.row(4);
        auto base = babai_decode(dual, t);
        auto moved = babai_decode(dual, shifted);
        CHECK(moved[0] == base[0] + 2);
        CHECK(moved[2] == base[2] - 3);
        for (std::size_t j : {1ul, 3ul})
            CHECK(moved[j] == base[j]);
    }
}

TEST_CASE("fast dual path equals the naive overlaps") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::uint32_t q : {5u, 7u, 11u, 101u, 211u, 503u}) {
        LogUnitBasis basis(q);
        auto dual = dual_direct(basis);
        FastDualTransform fast(basis);
        Eigen::VectorXd t(static_cast<Eigen::Index>(basis.dim()));
        for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = u(rng);
        Eigen::VectorXd naive = dual.overlaps(t);
        Eigen::VectorXd quick = fast.overlaps(t);
        REQUIRE(naive.size() == quick.size());
        for (Eigen::Index i = 0; i < naive.size(); ++i)
            CHECK(std::abs(naive[i] - quick[i]) < 1e-8);
    }
}

TEST_CASE("fast path corner cases") {
    LogUnitBasis b5(5);
    FastDualTransform fast(b5);
    auto ov = fast.overlaps(b5.row(2));
    CHECK(ov[0] == doctest::Approx(1.0).epsilon(1e-12));

    for (std::uint32_t q : {5u, 11u, 101u}) {
        LogUnitBasis basis(q);
        FastDualTransform f(basis);
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(basis.dim()));
        auto zero = f.overlaps(ones);
        for (Eigen::Index i = 0; i < zero.size(); ++i) CHECK(std::abs(zero[i]) < 1e-9);
    }
}

TEST_CASE("combine materialises integer combinations") {
    LogUnitBasis basis(11);
    FastDualTransform fast(basis);
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(basis.rank()));
    coeffs << 1, -2, 0, 3;
    Eigen::VectorXd direct = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.dim()));
    for (std::uint32_t j = 2; j <= basis.dim(); ++j)
        direct += coeffs[j - 2] * basis.row(j);
    Eigen::VectorXd viafft = fast.combine(coeffs);
    for (Eigen::Index i = 0; i < direct.size(); ++i)
        CHECK(std::abs(direct[i] - viafft[i]) < 1e-10);
}

TEST_CASE("dual norm report serialisation") {
    auto rep = dual_norm_report(101);
    auto json = dual_norm_to_json(rep);
    CHECK(json.find("\"q\":101") != std::string::npos);
    CHECK(json.find("nu_direct") != std::string::npos);
    CHECK(json.find("asymptote_4zeta_ratio") != std::string::npos);
    auto rep2 = dual_norm_report(3001);
    CHECK(!rep2.has_direct);
    CHECK(dual_norm_to_json(rep2).find("nu_direct") == std::string::npos);
}
