#ifndef CYCLO_SGPSIM_HPP
#define CYCLO_SGPSIM_HPP

#include "cyclo/summation.hpp"
#include "cyclo/unitlat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

// SplitMix64 step; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// (ln X_hat_i)_{i=1..n} with X_hat_i = sqrt(X_i^2 + X_i'^2) and X_i, X_i'
// i.i.d. centred normal with standard deviation r. Deterministic in the
// seed (own Box-Muller over mt19937_64; std::normal_distribution is not
// reproducible across standard libraries).
std::vector<double> sample_log_gaussian(std::size_t n, double r, std::uint64_t seed);

struct TrialRecord {
    std::uint64_t seed = 0;
    std::vector<std::int64_t> exponents;
    std::vector<std::int64_t> recovered;
    double max_overlap = 0.0;   // max_j |<b_j^dual, Log g>|
    bool success = false;
};

// One recovery trial: sample Log g, sample exponents a uniform in
// [-B, B]^{n-1}, decode Log g + sum a_j b_j by Babai round-off through the
// fast dual path, and compare.
TrialRecord run_trial(const FastDualTransform& fast, double r,
                      std::int64_t exponent_bound, std::uint64_t seed,
                      bool keep_vectors = false);

struct BoundRecord {
    double t_new = 0.0;       // (1/(4 sqrt 2)) sqrt(q zeta(4)/zeta(2))
    double alpha_new = 0.0;   // 1 - (q-3) exp(-t_new/2)
    double t_old = 0.0;       // sqrt(q) / (4 sqrt(2) C_L ln ln q)
    double alpha_old = 0.0;
    double old_dual_norm_bound = 0.0;   // 4 C_L^2 (ln ln q)^2 / q
};

BoundRecord theoretical_bounds(std::uint32_t q);

struct ExperimentReport {
    std::uint32_t q = 0;
    double r = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    double empirical_rate = 0.0;
    WilsonInterval wilson{0.0, 0.0};   // 95% interval
    BoundRecord bounds;
    std::uint64_t seed = 0;
    std::int64_t exponent_bound = 0;
    double max_overlap_seen = 0.0;
    std::vector<TrialRecord> records;  // filled when keep_records
};

// Per-trial seeds derived from (seed, index); aggregation is
// order-independent, so the report does not depend on the worker count.
ExperimentReport run_experiment(std::uint32_t q, double r, std::int64_t trials,
                                std::uint64_t seed, std::int64_t exponent_bound = 10,
                                unsigned threads = 1, bool keep_records = false);

struct TailReport {
    std::size_t n = 0;
    std::size_t ell = 0;
    double r = 0.0;
    double t = 0.0;
    std::int64_t trials = 0;
    std::int64_t exceed = 0;       // trials where some |<a^(j), ln X_hat>| >= t
    double empirical = 0.0;
    double bound = 0.0;            // 2 * ell * exp(-t/2)
    bool vacuous = false;          // bound >= 1: nothing to check
    WilsonInterval wilson{0.0, 0.0};
};

// Empirical check of the Gaussian tail bound along the given unit
// directions (each orthogonal to the all-1 vector).
TailReport tail_check(std::size_t n, const std::vector<Eigen::VectorXd>& directions,
                      double r, double t, std::int64_t trials, std::uint64_t seed);

std::string experiment_to_json(const ExperimentReport& rep);
std::string experiment_to_csv(const ExperimentReport& rep);   // per-trial lines
std::string tail_to_json(const TailReport& rep);

} // namespace cyclo

#endif
