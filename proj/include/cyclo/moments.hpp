#ifndef CYCLO_MOMENTS_HPP
#define CYCLO_MOMENTS_HPP

#include "cyclo/chargroup.hpp"
#include "cyclo/lfun.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

// r_k(n): k-fold Dirichlet convolution of the Moebius function, i.e. the
// Dirichlet coefficients of 1/L(s, chi)^k. Supported on (k+1)-free n with
// r_k(p^v) = (-1)^v * binomial(k, v).
struct RkTable {
    int k = 0;
    std::int64_t N = 0;
    std::vector<std::int64_t> values;   // values[n] for 1 <= n <= N; values[0] unused

    std::int64_t at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

RkTable rk_sieve(int k, std::int64_t N);

// Exact integer sum of r_k(n) over n <= x, n = a (mod q). Requires
// gcd(a, q) = 1 (throws std::invalid_argument otherwise).
std::int64_t rk_ap_sum(int k, std::int64_t x, std::int64_t q, std::int64_t a);

struct EulerProductValue {
    double value = 0.0;
    double tail_width = 0.0;   // rigorous bound on |true - value|
};

// Truncated Euler product C(k) = prod_p (1 + sum_v binom(k,v)^2 / p^{2v})
// over primes p <= P, with a tail bound from sum_{p>P} 1/p^2 < 1/(P-1).
EulerProductValue euler_ck(int k, std::int64_t P);

// prod over distinct primes p | q of (1 + sum_v binom(k,v)^2/p^{2v})^{-1}.
double local_factor(int k, std::int64_t q);

// sum_{m <= N, gcd(m,q)=1} r_k(m)^2 / m^2; converges to
// euler_ck(k) * local_factor(k, q) as N grows.
double diag_series(int k, std::int64_t q, std::int64_t N);

// sum of 1/|L(1,chi)|^{2k} over nonprincipal characters passing the
// parity filter. Sets *empty_filter when the filtered set is empty
// (q = 3 with the even filter) and returns 0.
double neg_moment(const LTable& tab, int k, ParityFilter filter,
                  bool* empty_filter = nullptr);

struct MomentEstimate {
    std::uint32_t q = 0;
    int k = 0;
    ParityFilter filter = ParityFilter::Even;
    double empirical = 0.0;
    double predicted = 0.0;
    double ratio = 0.0;
    double c_k = 0.0;
    double local = 0.0;
    bool empty_filter = false;
};

// Prediction: (C(k)/2) * phi(q) * local_factor for a single parity,
// C(k) * phi(q) * local_factor over all nonprincipal characters.
MomentEstimate moment_report(std::uint32_t q, int k, ParityFilter filter);
MomentEstimate moment_report(const CharacterGroup& grp, const LTable& tab, int k,
                             ParityFilter filter);

std::string parity_name(ParityFilter f);
std::string moment_to_json(const MomentEstimate& m);
std::string moment_csv_header();
std::string moment_to_csv_row(const MomentEstimate& m);

} // namespace cyclo

#endif
