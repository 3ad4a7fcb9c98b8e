#ifndef CYCLO_UNITLAT_HPP
#define CYCLO_UNITLAT_HPP

#include "cyclo/chargroup.hpp"
#include "cyclo/lfun.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

// Log-embedding basis of the cyclotomic unit lattice for prime q, stored
// implicitly via the z-vector z_i = ln(2 sin(pi i / q)) over the index set
// G = {1..n}, n = (q-1)/2. Row j (j in G \ {1}) has entries
//   (b_j)_i = z_{fold(i*j)} - z_i,
// each summing to zero. O(q) memory; rows materialised on demand.
class LogUnitBasis {
public:
    explicit LogUnitBasis(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::size_t dim() const { return n_; }            // ambient dimension n
    std::size_t rank() const { return n_ - 1; }       // number of basis rows

    double z(std::uint32_t i) const { return z_[i - 1]; }   // i in {1..n}
    std::uint32_t fold(std::uint64_t m) const;

    // Row for j in {2..n}, materialised as a dense length-n vector.
    Eigen::VectorXd row(std::uint32_t j) const;

    // Group reindexing: position m in {0..n-1} maps to index fold(g^m).
    std::uint32_t index_of_position(std::size_t m) const { return idx_of_pos_[m]; }
    std::size_t position_of_index(std::uint32_t i) const { return pos_of_idx_[i]; }
    std::uint32_t primitive_root() const { return g_; }

private:
    std::uint32_t q_;
    std::uint32_t g_;
    std::size_t n_;
    std::vector<double> z_;
    std::vector<std::uint32_t> idx_of_pos_;
    std::vector<std::size_t> pos_of_idx_;   // index 0 unused, size n+1
};

struct DualBasis {
    std::uint32_t q = 0;
    std::size_t n = 0;
    Eigen::MatrixXd vectors;   // n x (n-1); column j-2 holds b_j^dual
    double nu = 0.0;           // shared squared norm of the dual vectors

    Eigen::VectorXd overlaps(const Eigen::VectorXd& target) const;
};

// Dual vectors as columns of B (B^T B)^{-1} (pseudoinverse within the
// span). O(n^3); intended for q up to about 2000.
DualBasis dual_direct(const LogUnitBasis& basis);

// ||b_j^dual||^2 = (4/|G|) sum over even nonprincipal chi of
// 1/(q |L(1,chi)|^2), with |G| = (q-1)/2.
double dual_norm_via_L(const LTable& tab);

// round(<b_j^dual, target>) with round(x) = floor(x + 1/2), matching the
// half-open interval [-1/2, 1/2).
std::vector<std::int64_t> babai_decode(const DualBasis& dual,
                                       const Eigen::VectorXd& target);
std::vector<std::int64_t> round_coefficients(const Eigen::VectorXd& overlaps);

// O(n log n) dual-coefficient transform exploiting the group-circulant
// structure of the basis under G = Z_{(q-1)/2}: reindex coordinates by the
// discrete log, project onto the complement of the all-1 direction, and
// divide by the per-frequency eigenvalues of the z-correlation.
class FastDualTransform {
public:
    explicit FastDualTransform(const LogUnitBasis& basis);

    // <b_j^dual, target> for all j in {2..n}, entry j-2.
    Eigen::VectorXd overlaps(const Eigen::VectorXd& target) const;

    // sum_j coeffs[j-2] * b_j (+ base when given), built with two
    // transforms instead of materialising rows.
    Eigen::VectorXd combine(const Eigen::VectorXd& coeffs) const;
    Eigen::VectorXd combine(const Eigen::VectorXd& coeffs,
                            const Eigen::VectorXd& base) const;

    const LogUnitBasis& basis() const { return *basis_; }

private:
    const LogUnitBasis* basis_;
    std::vector<std::complex<double>> z_hat_;   // DFT of z along the group orbit
};

struct DualNormReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    bool has_direct = false;
    double nu_direct = 0.0;
    double nu_via_L = 0.0;
    double asymptote_ratio = 0.0;   // q * nu / (4 zeta(2)/zeta(4))
};

// nu by both routes (direct route only for q <= direct_cutoff).
DualNormReport dual_norm_report(std::uint32_t q, std::uint32_t direct_cutoff = 2000);

std::string dual_norm_to_json(const DualNormReport& r);

} // namespace cyclo

#endif
