#include "cyclo/unitlat.hpp"

#include "cyclo/dft.hpp"
#include "cyclo/summation.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cyclo {

namespace {

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

constexpr double kZeta2OverZeta4 = 15.0 / (std::numbers::pi * std::numbers::pi);

} // namespace

LogUnitBasis::LogUnitBasis(std::uint32_t q) : q_(q) {
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("modulus must be an odd prime >= 3");
    g_ = smallest_primitive_root(q);
    n_ = (q - 1) / 2;
    z_.resize(n_);
    for (std::uint32_t i = 1; i <= n_; ++i)
        z_[i - 1] = std::log(2.0 * std::sin(std::numbers::pi * i / q));
    idx_of_pos_.resize(n_);
    pos_of_idx_.assign(n_ + 1, 0);
    std::uint64_t pw = 1;
    for (std::size_t m = 0; m < n_; ++m) {
        std::uint32_t i = fold(pw);
        idx_of_pos_[m] = i;
        pos_of_idx_[i] = m;
        pw = (pw * g_) % q;
    }
}

std::uint32_t LogUnitBasis::fold(std::uint64_t m) const {
    std::uint32_t r = static_cast<std::uint32_t>(m % q_);
    return std::min(r, q_ - r);
}

Eigen::VectorXd LogUnitBasis::row(std::uint32_t j) const {
    if (j < 2 || j > n_) throw std::out_of_range("basis row index must lie in {2..n}");
    Eigen::VectorXd r(static_cast<Eigen::Index>(n_));
    for (std::uint32_t i = 1; i <= n_; ++i)
        r[i - 1] = z(fold(static_cast<std::uint64_t>(i) * j)) - z(i);
    return r;
}

Eigen::VectorXd DualBasis::overlaps(const Eigen::VectorXd& target) const {
    if (target.size() != static_cast<Eigen::Index>(n))
        throw std::invalid_argument("target dimension mismatch");
    return vectors.transpose() * target;
}

DualBasis dual_direct(const LogUnitBasis& basis) {
    const std::size_t n = basis.dim();
    if (basis.rank() < 1)
        throw std::invalid_argument("basis has no rows (q = 3)");
    Eigen::MatrixXd B(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - 1));
    for (std::uint32_t j = 2; j <= n; ++j)
        B.col(j - 2) = basis.row(j);
    Eigen::MatrixXd gram = B.transpose() * B;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
        throw std::runtime_error("Gram matrix numerically singular");
    DualBasis dual;
    dual.q = basis.q();
    dual.n = n;
    dual.vectors = B * ldlt.solve(Eigen::MatrixXd::Identity(
                            static_cast<Eigen::Index>(n - 1),
                            static_cast<Eigen::Index>(n - 1)));
    dual.nu = dual.vectors.col(0).squaredNorm();
    return dual;
}

double dual_norm_via_L(const LTable& tab) {
    if (tab.q < 5) throw std::invalid_argument("dual norm via L requires prime q >= 5");
    KahanSum s;
    for (std::uint32_t t = 2; t <= tab.values.size(); t += 2)
        s.add(1.0 / (static_cast<double>(tab.q) * std::norm(tab.at(t))));
    double g_size = (tab.q - 1) / 2.0;
    return 4.0 / g_size * s.value();
}

std::vector<std::int64_t> round_coefficients(const Eigen::VectorXd& overlaps) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(overlaps.size()));
    for (Eigen::Index j = 0; j < overlaps.size(); ++j)
        out[static_cast<std::size_t>(j)] =
            static_cast<std::int64_t>(std::floor(overlaps[j] + 0.5));
    return out;
}

std::vector<std::int64_t> babai_decode(const DualBasis& dual,
                                       const Eigen::VectorXd& target) {
    return round_coefficients(dual.overlaps(target));
}

FastDualTransform::FastDualTransform(const LogUnitBasis& basis) : basis_(&basis) {
    if (basis.rank() < 1)
        throw std::invalid_argument("basis has no rows (q = 3)");
    const std::size_t n = basis.dim();
    std::vector<std::complex<double>> zeta(n);
    for (std::size_t m = 0; m < n; ++m)
        zeta[m] = basis.z(basis.index_of_position(m));
    z_hat_ = dft_forward(zeta);
    for (std::size_t u = 1; u < n; ++u)
        if (std::abs(z_hat_[u]) < 1e-14)
            throw std::runtime_error("vanishing circulant eigenvalue");
}

Eigen::VectorXd FastDualTransform::overlaps(const Eigen::VectorXd& target) const {
    const std::size_t n = basis_->dim();
    if (target.size() != static_cast<Eigen::Index>(n))
        throw std::invalid_argument("target dimension mismatch");
    // Project onto the complement of the all-1 direction; the duals live
    // there while Log g carries a nonzero all-1 (norm) component.
    double mean = target.mean();
    std::vector<std::complex<double>> t(n);
    for (std::size_t m = 0; m < n; ++m)
        t[m] = target[static_cast<Eigen::Index>(basis_->index_of_position(m)) - 1] - mean;
    auto t_hat = dft_forward(t);
    std::vector<std::complex<double>> h(n, 0.0);
    for (std::size_t u = 1; u < n; ++u)
        h[u] = std::conj(t_hat[u] / z_hat_[u]);
    auto a = dft_inverse(h);
    Eigen::VectorXd out(static_cast<Eigen::Index>(n - 1));
    for (std::size_t s = 1; s < n; ++s) {
        std::uint32_t j = basis_->index_of_position(s);
        out[static_cast<Eigen::Index>(j) - 2] = a[s].real();
    }
    return out;
}

Eigen::VectorXd FastDualTransform::combine(const Eigen::VectorXd& coeffs) const {
    const std::size_t n = basis_->dim();
    if (coeffs.size() != static_cast<Eigen::Index>(n - 1))
        throw std::invalid_argument("coefficient dimension mismatch");
    std::vector<std::complex<double>> a(n, 0.0);
    for (std::uint32_t j = 2; j <= n; ++j)
        a[basis_->position_of_index(j)] = coeffs[static_cast<Eigen::Index>(j) - 2];
    auto a_hat = dft_forward(a);
    std::vector<std::complex<double>> t_hat(n);
    for (std::size_t u = 0; u < n; ++u)
        t_hat[u] = (std::conj(a_hat[u]) - a_hat[0]) * z_hat_[u];
    auto t = dft_inverse(t_hat);
    Eigen::VectorXd out(static_cast<Eigen::Index>(n));
    for (std::size_t m = 0; m < n; ++m)
        out[static_cast<Eigen::Index>(basis_->index_of_position(m)) - 1] = t[m].real();
    return out;
}

Eigen::VectorXd FastDualTransform::combine(const Eigen::VectorXd& coeffs,
                                           const Eigen::VectorXd& base) const {
    return combine(coeffs) + base;
}

DualNormReport dual_norm_report(std::uint32_t q, std::uint32_t direct_cutoff) {
    DualNormReport r;
    LogUnitBasis basis(q);
    r.q = q;
    r.n = basis.dim();
    CharacterGroup grp(q);
    r.nu_via_L = dual_norm_via_L(l1_table(grp));
    if (q <= direct_cutoff && basis.rank() >= 1) {
        r.has_direct = true;
        r.nu_direct = dual_direct(basis).nu;
    }
    r.asymptote_ratio = q * r.nu_via_L / (4.0 * kZeta2OverZeta4);
    return r;
}

std::string dual_norm_to_json(const DualNormReport& r) {
    std::string out = "{\"q\":" + std::to_string(r.q) + ",\"n\":" + std::to_string(r.n);
    if (r.has_direct) out += ",\"nu_direct\":" + format17(r.nu_direct);
    out += ",\"nu_via_L\":" + format17(r.nu_via_L) +
           ",\"asymptote_4zeta_ratio\":" + format17(r.asymptote_ratio) + "}";
    return out;
}

} // namespace cyclo
