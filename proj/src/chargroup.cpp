#include "cyclo/chargroup.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyclo {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

std::uint32_t smallest_primitive_root(std::uint32_t q) {
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t g = 2; g < q; ++g) {
        bool ok = true;
        for (auto p : factors) {
            if (pow_mod(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found (q not prime?)");
}

CharacterGroup::CharacterGroup(std::uint32_t q) : q_(q) {
    if (q < 3 || !is_prime(q))
        throw std::invalid_argument("modulus must be an odd prime >= 3");
    g_ = smallest_primitive_root(q);
    dlog_.assign(q, 0);
    std::uint64_t pw = 1;
    for (std::uint32_t m = 0; m < q - 1; ++m) {
        dlog_[pw] = m;
        pw = (pw * g_) % q;
    }
    unit_.resize(q - 1);
    for (std::uint32_t m = 0; m < q - 1; ++m) {
        double ang = 2.0 * std::numbers::pi * m / (q - 1);
        unit_[m] = {std::cos(ang), std::sin(ang)};
    }
}

std::uint32_t CharacterGroup::dlog(std::uint64_t a) const {
    return dlog_[a % q_];
}

std::uint32_t CharacterGroup::fold(std::uint64_t m) const {
    std::uint32_t r = static_cast<std::uint32_t>(m % q_);
    return std::min(r, q_ - r);
}

std::complex<double> CharacterGroup::chi(std::uint32_t t, std::int64_t n) const {
    if (t > q_ - 2) throw std::out_of_range("character index out of range");
    std::int64_t r = n % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    if (r == 0) return 0.0;
    std::uint64_t e = static_cast<std::uint64_t>(t) * dlog_[r];
    return unit_[e % (q_ - 1)];
}

std::complex<double> CharacterGroup::gauss_sum(std::uint32_t t) const {
    if (t > q_ - 2) throw std::out_of_range("character index out of range");
    if (t == 0) throw std::invalid_argument("Gauss sum requires a nonprincipal character");
    std::complex<double> s = 0.0;
    for (std::uint32_t a = 1; a < q_; ++a) {
        double ang = 2.0 * std::numbers::pi * a / q_;
        s += chi(t, a) * std::complex<double>{std::cos(ang), std::sin(ang)};
    }
    return s;
}

std::complex<double> CharacterGroup::orthogonality_sum(int parity, std::int64_t n1,
                                                       std::int64_t n2) const {
    std::complex<double> s = 0.0;
    for (std::uint32_t t = 0; t < q_ - 1; ++t) {
        if (this->parity(t) != parity) continue;
        s += chi(t, n1) * std::conj(chi(t, n2));
    }
    return s;
}

} // namespace cyclo
