#ifndef CYCLO_CHARGROUP_HPP
#define CYCLO_CHARGROUP_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace cyclo {

enum class ParityFilter { Even, Odd, All };

// Multiplicative structure of Z_q^* for an odd prime q: smallest primitive
// root, discrete-log table, and the q-1 st roots of unity. One shared dlog
// table serves every Dirichlet character mod q; character t evaluates as
//   chi_t(a) = exp(2*pi*i * t * dlog[a] / (q-1)).
// Immutable after construction; all member functions are pure.
class CharacterGroup {
public:
    // Throws std::invalid_argument unless q is an odd prime >= 3.
    explicit CharacterGroup(std::uint32_t q);

    std::uint32_t modulus() const { return q_; }
    std::uint32_t primitive_root() const { return g_; }
    std::uint32_t order() const { return q_ - 1; }           // |Z_q^*|
    std::uint32_t num_characters() const { return q_ - 1; }

    // dlog[a] for 1 <= a <= q-1; precondition a not divisible by q.
    std::uint32_t dlog(std::uint64_t a) const;

    // fold(m) = min(m mod q, q - m mod q): canonical representative of
    // the class of m in G = Z_q^*/{+-1}. Result in {1..(q-1)/2}.
    std::uint32_t fold(std::uint64_t m) const;

    // chi(-1) of character t: +1 even, -1 odd. Equals (-1)^t for prime q.
    int parity(std::uint32_t t) const { return (t % 2 == 0) ? +1 : -1; }

    // Conductor: 1 for the principal character, q otherwise (prime q).
    std::uint32_t conductor(std::uint32_t t) const { return t == 0 ? 1u : q_; }

    // chi_t(n); 0 when q | n. Throws std::out_of_range for t > q-2.
    std::complex<double> chi(std::uint32_t t, std::int64_t n) const;

    // tau(chi_t) = sum_a chi_t(a) e(a/q). Throws std::invalid_argument
    // for t = 0 (principal characters have no Gauss sum here).
    std::complex<double> gauss_sum(std::uint32_t t) const;

    // sum over characters of the given parity of chi(n1) * conj(chi(n2)).
    std::complex<double> orthogonality_sum(int parity, std::int64_t n1,
                                           std::int64_t n2) const;

    // exp(2*pi*i * m / (q-1)) from the precomputed table.
    std::complex<double> root_of_unity(std::uint64_t m) const {
        return unit_[m % (q_ - 1)];
    }

private:
    std::uint32_t q_;
    std::uint32_t g_;
    std::vector<std::uint32_t> dlog_;             // size q, dlog_[0] unused
    std::vector<std::complex<double>> unit_;      // size q-1
};

bool is_prime(std::uint64_t n);

// Smallest positive primitive root mod an odd prime q (deterministic).
std::uint32_t smallest_primitive_root(std::uint32_t q);

} // namespace cyclo

#endif
