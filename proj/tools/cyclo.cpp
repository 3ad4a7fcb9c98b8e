// Command-line surface for the character-group, L-function, moment,
// log-unit-lattice and recovery-experiment modules. Every subcommand
// emits a deterministic report (JSON by default) with the resolved
// configuration embedded.

#include "cyclo/chargroup.hpp"
#include "cyclo/lfun.hpp"
#include "cyclo/moments.hpp"
#include "cyclo/sgpsim.hpp"
#include "cyclo/unitlat.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// --out paths resolve against CYCLO_OUT_DIR when relative; empty --out
// means stdout.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("CYCLO_OUT_DIR"))
            p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open output file: " + p.string());
    f << payload;
    if (!f) throw std::ios_base::failure("write failed: " + p.string());
}

cyclo::ParityFilter parse_parity(const std::string& s) {
    if (s == "even") return cyclo::ParityFilter::Even;
    if (s == "odd") return cyclo::ParityFilter::Odd;
    if (s == "all") return cyclo::ParityFilter::All;
    throw CLI::ValidationError("--parity must be even, odd or all");
}

std::string chars_report(std::uint32_t q) {
    cyclo::CharacterGroup grp(q);
    double max_char_sum = 0.0;
    double max_gauss_err = 0.0;
    for (std::uint32_t t = 1; t <= q - 2; ++t) {
        std::complex<double> s = 0.0;
        for (std::uint32_t a = 1; a < q; ++a) s += grp.chi(t, a);
        max_char_sum = std::max(max_char_sum, std::abs(s));
        max_gauss_err = std::max(max_gauss_err,
                                 std::abs(std::norm(grp.gauss_sum(t)) - q));
    }
    return "{\"q\":" + std::to_string(q) +
           ",\"primitive_root\":" + std::to_string(grp.primitive_root()) +
           ",\"phi\":" + std::to_string(q - 1) +
           ",\"even_characters\":" + std::to_string((q - 1) / 2) +
           ",\"odd_characters\":" + std::to_string((q - 1) / 2) +
           ",\"max_abs_nonprincipal_character_sum\":" + format17(max_char_sum) +
           ",\"max_gauss_modulus_error\":" + format17(max_gauss_err) + "}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-cyclotomic-unit lattice and Dirichlet L-moment laboratory"};
    app.require_subcommand(1);

    std::uint32_t q = 5;
    int k = 1;
    std::string parity = "even";
    std::string format = "json";
    std::string out_path;
    std::string method = "auto";
    std::uint64_t seed = 1;
    std::int64_t trials = 100;
    double r = 1.0;
    std::uint64_t series_n = 0;
    std::int64_t euler_p = 1000000;
    unsigned threads = 1;
    std::int64_t exp_bound = 10;
    std::uint32_t qmax = 0;
    std::size_t tail_n = 500;
    double tail_t = 6.0;
    std::size_t tail_ell = 1;
    std::uint32_t tail_q = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* sc_chars = app.add_subcommand("chars", "character group summary and identity checks");
    sc_chars->add_option("--q", q, "odd prime modulus")->required();
    add_common(sc_chars);

    auto* sc_lvalues = app.add_subcommand("lvalues", "table of L(1,chi) for nonprincipal chi");
    sc_lvalues->add_option("--q", q, "odd prime modulus")->required();
    sc_lvalues->add_option("--method", method, "auto, naive, dft or series")
        ->check(CLI::IsMember({"auto", "naive", "dft", "series"}));
    sc_lvalues->add_option("--N", series_n, "series truncation (series method only)");
    add_common(sc_lvalues);

    auto* sc_moments = app.add_subcommand("moments", "negative 2k-th moment report");
    sc_moments->add_option("--q", q, "odd prime modulus")->required();
    sc_moments->add_option("--k", k, "moment order")->check(CLI::PositiveNumber);
    sc_moments->add_option("--parity", parity, "even, odd or all")
        ->check(CLI::IsMember({"even", "odd", "all"}));
    sc_moments->add_option("--qmax", qmax, "sweep primes q..qmax (CSV, one row per prime)");
    add_common(sc_moments);

    auto* sc_dualnorm = app.add_subcommand("dualnorm", "dual-basis norm by both routes");
    sc_dualnorm->add_option("--q", q, "odd prime modulus")->required();
    add_common(sc_dualnorm);

    auto* sc_sgp = app.add_subcommand("sgp", "short-generator recovery experiment");
    sc_sgp->add_option("--q", q, "odd prime modulus")->required();
    sc_sgp->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    sc_sgp->add_option("--seed", seed, "experiment seed");
    sc_sgp->add_option("--r", r, "Gaussian scale (standard deviation)");
    sc_sgp->add_option("--B", exp_bound, "exponent bound");
    sc_sgp->add_option("--threads", threads, "worker cap (does not affect results)");
    add_common(sc_sgp);

    auto* sc_tail = app.add_subcommand("tailcheck", "Gaussian tail bound Monte Carlo check");
    sc_tail->add_option("--n", tail_n, "sample dimension");
    sc_tail->add_option("--t", tail_t, "threshold t");
    sc_tail->add_option("--r", r, "Gaussian scale");
    sc_tail->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
    sc_tail->add_option("--seed", seed, "seed");
    sc_tail->add_option("--ell", tail_ell, "number of directions");
    sc_tail->add_option("--q", tail_q, "take directions from the normalised duals of this basis");
    add_common(sc_tail);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_chars->parsed()) {
            emit(out_path, chars_report(q));
        } else if (sc_lvalues->parsed()) {
            cyclo::CharacterGroup grp(q);
            cyclo::LTable tab;
            if (method == "series") {
                std::uint64_t n_trunc =
                    series_n ? series_n : cyclo::l1_series_default_truncation(q);
                cyclo::HarmonicTable h(grp, n_trunc);
                tab.q = q;
                tab.method = "series";
                tab.values.resize(q - 2);
                for (std::uint32_t t = 1; t <= q - 2; ++t)
                    tab.values[t - 1] = cyclo::l1_series(grp, t, h);
            } else {
                auto m = method == "naive"  ? cyclo::LTableMethod::Naive
                         : method == "dft"  ? cyclo::LTableMethod::Dft
                                            : cyclo::LTableMethod::Auto;
                tab = cyclo::l1_table(grp, m);
            }
            emit(out_path, format == "csv" ? cyclo::ltable_to_csv(tab)
                                           : cyclo::ltable_to_json(tab));
        } else if (sc_moments->parsed()) {
            auto filter = parse_parity(parity);
            if (qmax >= q) {
                std::string csv = cyclo::moment_csv_header();
                for (std::uint32_t p = q; p <= qmax; ++p) {
                    if (p < 5 || !cyclo::is_prime(p)) continue;
                    csv += cyclo::moment_to_csv_row(cyclo::moment_report(p, k, filter));
                }
                emit(out_path, csv);
            } else {
                auto rep = cyclo::moment_report(q, k, filter);
                emit(out_path, format == "csv"
                                   ? cyclo::moment_csv_header() + cyclo::moment_to_csv_row(rep)
                                   : cyclo::moment_to_json(rep));
            }
        } else if (sc_dualnorm->parsed()) {
            emit(out_path, cyclo::dual_norm_to_json(cyclo::dual_norm_report(q)));
        } else if (sc_sgp->parsed()) {
            bool keep = format == "csv";
            auto rep = cyclo::run_experiment(q, r, trials, seed, exp_bound, threads, keep);
            emit(out_path, keep ? cyclo::experiment_to_csv(rep)
                                : cyclo::experiment_to_json(rep));
        } else if (sc_tail->parsed()) {
            std::vector<Eigen::VectorXd> dirs;
            if (tail_q != 0) {
                cyclo::LogUnitBasis basis(tail_q);
                auto dual = cyclo::dual_direct(basis);
                tail_n = basis.dim();
                std::size_t count = std::min<std::size_t>(tail_ell, basis.rank());
                for (std::size_t j = 0; j < count; ++j)
                    dirs.push_back(dual.vectors.col(static_cast<Eigen::Index>(j)).normalized());
            } else {
                if (tail_n < 2) throw CLI::ValidationError("--n must be >= 2");
                Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(tail_n));
                d[0] = 1.0 / std::numbers::sqrt2;
                d[1] = -1.0 / std::numbers::sqrt2;
                for (std::size_t j = 0; j < tail_ell; ++j) dirs.push_back(d);
            }
            auto rep = cyclo::tail_check(tail_n, dirs, r, tail_t, trials, seed);
            emit(out_path, cyclo::tail_to_json(rep));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
