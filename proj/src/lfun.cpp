#include "cyclo/lfun.hpp"

#include "cyclo/dft.hpp"
#include "cyclo/summation.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cyclo {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_nonprincipal(const CharacterGroup& grp, std::uint32_t t) {
    if (t > grp.modulus() - 2) throw std::out_of_range("character index out of range");
    if (t == 0) throw std::invalid_argument("L(1, chi) path requires a nonprincipal character");
}

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::complex<double> l1_closed(const CharacterGroup& grp, std::uint32_t t) {
    require_nonprincipal(grp, t);
    const std::uint32_t q = grp.modulus();
    const std::complex<double> tau = grp.gauss_sum(t);
    if (grp.parity(t) == +1) {
        KahanSumComplex s;
        for (std::uint32_t a = 1; a < q; ++a) {
            double w = std::log(2.0 * std::sin(std::numbers::pi * a / q));
            s.add(std::conj(grp.chi(t, a)) * w);
        }
        return -(tau / static_cast<double>(q)) * s.value();
    }
    KahanSumComplex b1;
    for (std::uint32_t a = 1; a < q; ++a)
        b1.add(std::conj(grp.chi(t, a)) * static_cast<double>(a));
    return kI * std::numbers::pi * tau / static_cast<double>(q) *
           (b1.value() / static_cast<double>(q));
}

HarmonicTable::HarmonicTable(const CharacterGroup& grp, std::uint64_t N_)
    : q(grp.modulus()), N(N_) {
    if (N < q) throw std::invalid_argument("series truncation must be >= q");
    std::vector<KahanSum> acc(q);
    for (std::uint64_t n = 1; n <= N; ++n)
        acc[n % q].add(1.0 / static_cast<double>(n));
    bucket.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) bucket[a] = acc[a].value();
}

std::complex<double> l1_series(const CharacterGroup& grp, std::uint32_t t,
                               const HarmonicTable& h) {
    require_nonprincipal(grp, t);
    if (h.q != grp.modulus()) throw std::invalid_argument("harmonic table modulus mismatch");
    const std::uint32_t q = grp.modulus();

    KahanSumComplex partial;
    for (std::uint32_t a = 1; a < q; ++a)
        partial.add(grp.chi(t, a) * h.bucket[a]);

    // S(N) depends only on N mod q since the full period sums to zero.
    std::complex<double> s_n = 0.0;
    for (std::uint32_t a = 1; a <= h.N % q; ++a) s_n += grp.chi(t, a);

    // Mean of the partial-sum function over one period.
    std::complex<double> mu = 0.0;
    for (std::uint32_t a = 1; a < q; ++a)
        mu += grp.chi(t, a) * static_cast<double>(a);
    mu *= -1.0 / static_cast<double>(q);

    return partial.value() + (mu - s_n) / static_cast<double>(h.N + 1);
}

std::complex<double> l1_series(const CharacterGroup& grp, std::uint32_t t,
                               std::uint64_t N) {
    return l1_series(grp, t, HarmonicTable(grp, N));
}

namespace {

LTable l1_table_naive(const CharacterGroup& grp) {
    LTable tab;
    tab.q = grp.modulus();
    tab.method = "closed-form";
    tab.values.resize(grp.modulus() - 2);
    for (std::uint32_t t = 1; t <= grp.modulus() - 2; ++t)
        tab.values[t - 1] = l1_closed(grp, t);
    return tab;
}

// All inner sums at once: reindex residues a = g^m and take length-(q-1)
// DFTs, so that conj(chi_t) pairs with frequency t and tau(chi_t) appears
// at frequency -t.
LTable l1_table_dft(const CharacterGroup& grp) {
    const std::uint32_t q = grp.modulus();
    const std::uint32_t n = q - 1;
    std::vector<std::complex<double>> w(n), res(n), e(n);
    std::uint64_t pw = 1;
    for (std::uint32_t m = 0; m < n; ++m) {
        double a = static_cast<double>(pw);
        w[m] = std::log(2.0 * std::sin(std::numbers::pi * a / q));
        res[m] = a;
        double ang = 2.0 * std::numbers::pi * a / q;
        e[m] = {std::cos(ang), std::sin(ang)};
        pw = (pw * grp.primitive_root()) % q;
    }
    auto W = dft_forward(w);
    auto B = dft_forward(res);
    auto T = dft_forward(e);

    LTable tab;
    tab.q = q;
    tab.method = "closed-form";
    tab.values.resize(q - 2);
    for (std::uint32_t t = 1; t <= q - 2; ++t) {
        std::complex<double> tau = T[(n - t) % n];
        if (grp.parity(t) == +1)
            tab.values[t - 1] = -(tau / static_cast<double>(q)) * W[t];
        else
            tab.values[t - 1] = kI * std::numbers::pi * tau / static_cast<double>(q) *
                                (B[t] / static_cast<double>(q));
    }
    return tab;
}

} // namespace

LTable l1_table(const CharacterGroup& grp, LTableMethod method) {
    switch (method) {
    case LTableMethod::Naive:
        return l1_table_naive(grp);
    case LTableMethod::Dft:
        return l1_table_dft(grp);
    case LTableMethod::Auto:
    default:
        return grp.modulus() > 256 ? l1_table_dft(grp) : l1_table_naive(grp);
    }
}

std::string ltable_to_json(const LTable& tab) {
    std::string out = "{\"q\":" + std::to_string(tab.q) +
                      ",\"method\":\"" + tab.method + "\",\"values\":[";
    for (std::uint32_t t = 1; t <= tab.values.size(); ++t) {
        const auto& v = tab.at(t);
        if (t > 1) out += ",";
        out += "{\"t\":" + std::to_string(t) +
               ",\"parity\":" + std::to_string(t % 2 == 0 ? 1 : -1) +
               ",\"re\":" + format17(v.real()) +
               ",\"im\":" + format17(v.imag()) +
               ",\"abs\":" + format17(std::abs(v)) + "}";
    }
    out += "]}";
    return out;
}

std::string ltable_to_csv(const LTable& tab) {
    std::string out = "t,parity,re_L,im_L,abs_L\n";
    for (std::uint32_t t = 1; t <= tab.values.size(); ++t) {
        const auto& v = tab.at(t);
        out += std::to_string(t) + "," + std::to_string(t % 2 == 0 ? 1 : -1) + "," +
               format17(v.real()) + "," + format17(v.imag()) + "," +
               format17(std::abs(v)) + "\n";
    }
    return out;
}

} // namespace cyclo
