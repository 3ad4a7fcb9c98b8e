#include "cyclo/sgpsim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace cyclo {

namespace {

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double uniform01(std::mt19937_64& rng) {
    // Strictly inside (0, 1); safe as a Box-Muller radius argument.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<double> sample_log_gaussian(std::size_t n, double r, std::uint64_t seed) {
    if (n < 1 || r <= 0.0) throw std::invalid_argument("need n >= 1 and r > 0");
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u1 = uniform01(rng);
        double u2 = uniform01(rng);
        double mag = std::sqrt(-2.0 * std::log(u1));
        double x = r * mag * std::cos(2.0 * std::numbers::pi * u2);
        double xp = r * mag * std::sin(2.0 * std::numbers::pi * u2);
        out[i] = std::log(std::hypot(x, xp));
    }
    return out;
}

TrialRecord run_trial(const FastDualTransform& fast, double r,
                      std::int64_t exponent_bound, std::uint64_t seed,
                      bool keep_vectors) {
    const std::size_t n = fast.basis().dim();
    const std::size_t rank = fast.basis().rank();

    auto logg = sample_log_gaussian(n, r, mix_seed(seed, 0));
    Eigen::VectorXd base(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) base[static_cast<Eigen::Index>(i)] = logg[i];

    std::mt19937_64 rng(mix_seed(seed, 1));
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(exponent_bound) + 1;
    std::vector<std::int64_t> a(rank);
    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(rank));
    for (std::size_t j = 0; j < rank; ++j) {
        a[j] = static_cast<std::int64_t>(rng() % span) - exponent_bound;
        coeffs[static_cast<Eigen::Index>(j)] = static_cast<double>(a[j]);
    }

    Eigen::VectorXd target = fast.combine(coeffs, base);
    Eigen::VectorXd overlaps = fast.overlaps(target);
    auto recovered = round_coefficients(overlaps);

    TrialRecord rec;
    rec.seed = seed;
    rec.success = (recovered == a);
    double mo = 0.0;
    for (std::size_t j = 0; j < rank; ++j)
        mo = std::max(mo, std::abs(overlaps[static_cast<Eigen::Index>(j)] -
                                   static_cast<double>(a[j])));
    rec.max_overlap = mo;
    if (keep_vectors) {
        rec.exponents = std::move(a);
        rec.recovered = std::move(recovered);
    }
    return rec;
}

BoundRecord theoretical_bounds(std::uint32_t q) {
    if (q < 5) throw std::invalid_argument("bounds require q >= 5");
    constexpr double pi = std::numbers::pi;
    const double zeta4_over_zeta2 = pi * pi / 15.0;   // zeta(2)=pi^2/6, zeta(4)=pi^4/90
    const double c_l = 12.0 * std::exp(std::numbers::egamma) / (pi * pi);
    BoundRecord b;
    b.t_new = std::sqrt(q * zeta4_over_zeta2) / (4.0 * std::numbers::sqrt2);
    b.alpha_new = 1.0 - (q - 3.0) * std::exp(-b.t_new / 2.0);
    const double loglogq = std::log(std::log(static_cast<double>(q)));
    b.t_old = std::sqrt(static_cast<double>(q)) /
              (4.0 * std::numbers::sqrt2 * c_l * loglogq);
    b.alpha_old = 1.0 - (q - 3.0) * std::exp(-b.t_old / 2.0);
    b.old_dual_norm_bound = 4.0 * c_l * c_l * loglogq * loglogq / q;
    return b;
}

ExperimentReport run_experiment(std::uint32_t q, double r, std::int64_t trials,
                                std::uint64_t seed, std::int64_t exponent_bound,
                                unsigned threads, bool keep_records) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    LogUnitBasis basis(q);
    FastDualTransform fast(basis);

    std::vector<TrialRecord> records(static_cast<std::size_t>(trials));
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i)
            records[static_cast<std::size_t>(i)] =
                run_trial(fast, r, exponent_bound, mix_seed(seed, static_cast<std::uint64_t>(i)),
                          keep_records);
    };
    if (threads <= 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::int64_t chunk = (trials + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            std::int64_t lo = w * chunk;
            std::int64_t hi = std::min<std::int64_t>(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    ExperimentReport rep;
    rep.q = q;
    rep.r = r;
    rep.trials = trials;
    rep.seed = seed;
    rep.exponent_bound = exponent_bound;
    for (const auto& rec : records) {
        if (rec.success) ++rep.successes;
        rep.max_overlap_seen = std::max(rep.max_overlap_seen, rec.max_overlap);
    }
    rep.empirical_rate = static_cast<double>(rep.successes) / static_cast<double>(trials);
    rep.wilson = wilson_interval(rep.successes, trials, 1.959963984540054);
    rep.bounds = theoretical_bounds(q);
    if (keep_records) rep.records = std::move(records);
    return rep;
}

TailReport tail_check(std::size_t n, const std::vector<Eigen::VectorXd>& directions,
                      double r, double t, std::int64_t trials, std::uint64_t seed) {
    if (t <= 0.0) throw std::invalid_argument("threshold t must be positive");
    if (directions.empty()) throw std::invalid_argument("need at least one direction");
    for (const auto& d : directions)
        if (d.size() != static_cast<Eigen::Index>(n))
            throw std::invalid_argument("direction dimension mismatch");

    TailReport rep;
    rep.n = n;
    rep.ell = directions.size();
    rep.r = r;
    rep.t = t;
    rep.trials = trials;
    rep.bound = 2.0 * static_cast<double>(rep.ell) * std::exp(-t / 2.0);
    rep.vacuous = rep.bound >= 1.0;

    for (std::int64_t i = 0; i < trials; ++i) {
        auto x = sample_log_gaussian(n, r, mix_seed(seed, static_cast<std::uint64_t>(i)));
        Eigen::Map<Eigen::VectorXd> v(x.data(), static_cast<Eigen::Index>(n));
        for (const auto& d : directions) {
            if (std::abs(d.dot(v)) >= t) {
                ++rep.exceed;
                break;
            }
        }
    }
    rep.empirical = static_cast<double>(rep.exceed) / static_cast<double>(trials);
    rep.wilson = wilson_interval(rep.exceed, trials, 1.959963984540054);
    return rep;
}

std::string experiment_to_json(const ExperimentReport& rep) {
    std::string out = "{\"config\":{\"q\":" + std::to_string(rep.q) +
                      ",\"r\":" + format17(rep.r) +
                      ",\"trials\":" + std::to_string(rep.trials) +
                      ",\"seed\":" + std::to_string(rep.seed) +
                      ",\"exponent_bound\":" + std::to_string(rep.exponent_bound) + "}";
    out += ",\"successes\":" + std::to_string(rep.successes) +
           ",\"empirical_rate\":" + format17(rep.empirical_rate) +
           ",\"wilson_low\":" + format17(rep.wilson.low) +
           ",\"wilson_high\":" + format17(rep.wilson.high) +
           ",\"max_overlap_seen\":" + format17(rep.max_overlap_seen) +
           ",\"t_new\":" + format17(rep.bounds.t_new) +
           ",\"alpha_new\":" + format17(rep.bounds.alpha_new) +
           ",\"t_old\":" + format17(rep.bounds.t_old) +
           ",\"alpha_old\":" + format17(rep.bounds.alpha_old) +
           ",\"old_dual_norm_bound\":" + format17(rep.bounds.old_dual_norm_bound) +
           ",\"note\":\"bounds assume t >= C_r for an unspecified universal constant C_r\"}";
    return out;
}

std::string experiment_to_csv(const ExperimentReport& rep) {
    std::string out = "trial,seed,success,max_overlap\n";
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& rec = rep.records[i];
        out += std::to_string(i) + "," + std::to_string(rec.seed) + "," +
               std::to_string(rec.success ? 1 : 0) + "," + format17(rec.max_overlap) + "\n";
    }
    return out;
}

std::string tail_to_json(const TailReport& rep) {
    return "{\"config\":{\"n\":" + std::to_string(rep.n) +
           ",\"ell\":" + std::to_string(rep.ell) +
           ",\"r\":" + format17(rep.r) +
           ",\"t\":" + format17(rep.t) +
           ",\"trials\":" + std::to_string(rep.trials) + "}" +
           ",\"exceed\":" + std::to_string(rep.exceed) +
           ",\"empirical\":" + format17(rep.empirical) +
           ",\"bound\":" + format17(rep.bound) +
           ",\"vacuous\":" + (rep.vacuous ? std::string("true") : std::string("false")) +
           ",\"wilson_low\":" + format17(rep.wilson.low) +
           ",\"wilson_high\":" + format17(rep.wilson.high) + "}";
}

} // namespace cyclo
