#include "cyclo/moments.hpp"

#include "cyclo/summation.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace cyclo {

namespace {

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::int64_t> mobius_sieve(std::int64_t N) {
    std::vector<std::int64_t> mu(static_cast<std::size_t>(N) + 1, 0);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(N) + 1, false);
    mu[1] = 1;
    for (std::int64_t i = 2; i <= N; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu[i] = -1;
        }
        for (auto p : primes) {
            if (i * p > N) break;
            composite[i * p] = true;
            if (i % p == 0) {
                mu[i * p] = 0;
                break;
            }
            mu[i * p] = -mu[i];
        }
    }
    return mu;
}

std::int64_t binom(int n, int v) {
    std::int64_t r = 1;
    for (int i = 1; i <= v; ++i) r = r * (n - v + i) / i;
    return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t P) {
    std::vector<bool> composite(static_cast<std::size_t>(P) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= P; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= P; j += i) composite[j] = true;
    }
    return primes;
}

double euler_factor(int k, double p) {
    double p2 = p * p;
    double term = 1.0;
    double acc = 1.0;
    for (int v = 1; v <= k; ++v) {
        double b = static_cast<double>(binom(k, v));
        term /= p2;
        acc += b * b * term;
    }
    return acc;
}

} // namespace

RkTable rk_sieve(int k, std::int64_t N) {
    if (k < 1 || N < 1) throw std::invalid_argument("rk_sieve requires k >= 1, N >= 1");
    auto mu = mobius_sieve(N);
    std::vector<std::int64_t> cur = mu;
    for (int level = 2; level <= k; ++level) {
        std::vector<std::int64_t> next(static_cast<std::size_t>(N) + 1, 0);
        for (std::int64_t d = 1; d <= N; ++d) {
            if (cur[d] == 0) continue;
            for (std::int64_t m = 1; d * m <= N; ++m) {
                if (mu[m] == 0) continue;
                next[d * m] += cur[d] * mu[m];
            }
        }
        cur = std::move(next);
    }
    RkTable tab;
    tab.k = k;
    tab.N = N;
    tab.values = std::move(cur);
    return tab;
}

std::int64_t rk_ap_sum(int k, std::int64_t x, std::int64_t q, std::int64_t a) {
    if (x < 1 || q < 1) throw std::invalid_argument("rk_ap_sum requires x >= 1, q >= 1");
    std::int64_t r = ((a % q) + q) % q;
    if (std::gcd(r, q) != 1) throw std::invalid_argument("residue must be coprime to q");
    auto tab = rk_sieve(k, x);
    std::int64_t s = 0;
    for (std::int64_t n = r == 0 ? q : r; n <= x; n += q) s += tab.at(n);
    return s;
}

EulerProductValue euler_ck(int k, std::int64_t P) {
    if (k < 1 || P < 2) throw std::invalid_argument("euler_ck requires k >= 1, P >= 2");
    double value = 1.0;
    for (auto p : primes_up_to(P))
        value *= euler_factor(k, static_cast<double>(p));
    // log of each missing factor is below sum_v binom(k,v)^2 / p^2, and
    // sum_{p>P} 1/p^2 < 1/(P-1).
    double coeff = 0.0;
    for (int v = 1; v <= k; ++v) {
        double b = static_cast<double>(binom(k, v));
        coeff += b * b;
    }
    double tail = value * std::expm1(coeff / static_cast<double>(P - 1));
    return {value, tail};
}

double local_factor(int k, std::int64_t q) {
    if (k < 1 || q < 2) throw std::invalid_argument("local_factor requires k >= 1, q >= 2");
    double f = 1.0;
    std::int64_t m = q;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        f /= euler_factor(k, static_cast<double>(p));
        while (m % p == 0) m /= p;
    }
    if (m > 1) f /= euler_factor(k, static_cast<double>(m));
    return f;
}

double diag_series(int k, std::int64_t q, std::int64_t N) {
    if (N < 1) throw std::invalid_argument("diag_series requires N >= 1");
    auto tab = rk_sieve(k, N);
    KahanSum s;
    for (std::int64_t m = 1; m <= N; ++m) {
        if (tab.at(m) == 0 || std::gcd(m, q) != 1) continue;
        double r = static_cast<double>(tab.at(m));
        s.add(r * r / (static_cast<double>(m) * static_cast<double>(m)));
    }
    return s.value();
}

double neg_moment(const LTable& tab, int k, ParityFilter filter, bool* empty_filter) {
    KahanSum s;
    bool any = false;
    for (std::uint32_t t = 1; t <= tab.values.size(); ++t) {
        int parity = (t % 2 == 0) ? +1 : -1;
        if (filter == ParityFilter::Even && parity != +1) continue;
        if (filter == ParityFilter::Odd && parity != -1) continue;
        any = true;
        double a2 = std::norm(tab.at(t));
        s.add(std::pow(a2, -k));
    }
    if (empty_filter) *empty_filter = !any;
    return s.value();
}

MomentEstimate moment_report(const CharacterGroup& grp, const LTable& tab, int k,
                             ParityFilter filter) {
    constexpr std::int64_t kEulerCutoff = 1000000;
    MomentEstimate m;
    m.q = grp.modulus();
    m.k = k;
    m.filter = filter;
    m.c_k = euler_ck(k, kEulerCutoff).value;
    m.local = local_factor(k, m.q);
    m.empirical = neg_moment(tab, k, filter, &m.empty_filter);
    double phi = static_cast<double>(m.q - 1);
    double half = (filter == ParityFilter::All) ? 1.0 : 0.5;
    m.predicted = half * m.c_k * phi * m.local;
    m.ratio = m.empirical / m.predicted;
    return m;
}

MomentEstimate moment_report(std::uint32_t q, int k, ParityFilter filter) {
    CharacterGroup grp(q);
    LTable tab = l1_table(grp);
    return moment_report(grp, tab, k, filter);
}

std::string parity_name(ParityFilter f) {
    switch (f) {
    case ParityFilter::Even: return "even";
    case ParityFilter::Odd: return "odd";
    default: return "all";
    }
}

std::string moment_to_json(const MomentEstimate& m) {
    std::string out = "{\"q\":" + std::to_string(m.q) +
                      ",\"k\":" + std::to_string(m.k) +
                      ",\"filter\":\"" + parity_name(m.filter) + "\"" +
                      ",\"empirical\":" + format17(m.empirical) +
                      ",\"predicted\":" + format17(m.predicted) +
                      ",\"ratio\":" + format17(m.ratio) +
                      ",\"C_k\":" + format17(m.c_k) +
                      ",\"local_factor\":" + format17(m.local);
    if (m.empty_filter) out += ",\"warning\":\"empty parity filter\"";
    out += "}";
    return out;
}

std::string moment_csv_header() {
    return "q,k,filter,empirical,predicted,ratio,C_k,local_factor\n";
}

std::string moment_to_csv_row(const MomentEstimate& m) {
    return std::to_string(m.q) + "," + std::to_string(m.k) + "," + parity_name(m.filter) +
           "," + format17(m.empirical) + "," + format17(m.predicted) + "," +
           format17(m.ratio) + "," + format17(m.c_k) + "," + format17(m.local) + "\n";
}

} // namespace cyclo
