#ifndef CYCLO_LFUN_HPP
#define CYCLO_LFUN_HPP

#include "cyclo/chargroup.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

// All values L(1, chi_t) for nonprincipal t in {1..q-2}.
struct LTable {
    std::uint32_t q = 0;
    std::vector<std::complex<double>> values;   // values[t-1] holds t
    std::string method;                         // "closed-form" or "series"

    const std::complex<double>& at(std::uint32_t t) const { return values[t - 1]; }
    std::size_t size() const { return values.size(); }
};

enum class LTableMethod { Auto, Naive, Dft };

// Finite closed form for L(1, chi_t), t != 0:
//   even chi:  -(tau(chi)/q) * sum_a conj(chi)(a) * ln(2 sin(pi a / q))
//   odd  chi:   (i*pi*tau(chi)/q) * B1(conj(chi)),
//               B1(psi) = (1/q) * sum_a psi(a) * a
// Sign conventions are pinned by agreement with l1_series in the tests.
std::complex<double> l1_closed(const CharacterGroup& grp, std::uint32_t t);

// Per-residue harmonic sums H[a] = sum_{n<=N, n=a mod q} 1/n, shared by
// every character of the same modulus. Building this once makes
// l1_series O(q) per character after an O(N) pass.
struct HarmonicTable {
    std::uint32_t q = 0;
    std::uint64_t N = 0;
    std::vector<double> bucket;   // index a in {0..q-1}

    HarmonicTable(const CharacterGroup& grp, std::uint64_t N);
};

// Truncated Dirichlet series sum_{n<=N} chi(n)/n plus an Abel-summation
// tail correction (mu_S - S(N))/(N+1) built from the bounded partial sums
// S of chi; remaining error is O(q^2 / N^2).
std::complex<double> l1_series(const CharacterGroup& grp, std::uint32_t t,
                               const HarmonicTable& h);
std::complex<double> l1_series(const CharacterGroup& grp, std::uint32_t t,
                               std::uint64_t N);

// Default oracle truncation: keeps the tail error well below 1e-4 at
// desk-scale q.
inline std::uint64_t l1_series_default_truncation(std::uint32_t q) {
    return std::max<std::uint64_t>(1000000, 100ull * q);
}

// Full table over t in {1..q-2}. The Dft method evaluates all inner sums
// at once with three length-(q-1) transforms after reindexing residues by
// the discrete log; Auto switches to it for q > 256.
LTable l1_table(const CharacterGroup& grp, LTableMethod method = LTableMethod::Auto);

std::string ltable_to_json(const LTable& tab);
std::string ltable_to_csv(const LTable& tab);

} // namespace cyclo

#endif
