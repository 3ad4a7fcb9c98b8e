#include "cyclo/dft.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>

namespace cyclo {

namespace {

// Plans are created once per (length, sign) under a lock; execution on
// caller-owned arrays via fftw_execute_dft is thread-safe. FFTW_UNALIGNED
// lets plans run on plain std::vector storage.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<std::complex<double>> tmp(n);
        fftw_plan p = fftw_plan_dft_1d(
            static_cast<int>(n),
            reinterpret_cast<fftw_complex*>(tmp.data()),
            reinterpret_cast<fftw_complex*>(tmp.data()),
            sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<std::complex<double>> run(std::span<const std::complex<double>> x, int sign) {
    std::vector<std::complex<double>> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(x.size());
    fftw_plan p = cache().get(x.size(), sign);
    fftw_execute_dft(p,
                     reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

} // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> x) {
    return run(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_inverse(std::span<const std::complex<double>> x) {
    auto out = run(x, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv;
    return out;
}

std::vector<std::complex<double>> dft_naive(std::span<const std::complex<double>> x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t t = 0; t < n; ++t) {
        std::complex<double> s = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            double ang = -2.0 * std::numbers::pi *
                         static_cast<double>((t * m) % n) / static_cast<double>(n);
            s += x[m] * std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        out[t] = s;
    }
    return out;
}

} // namespace cyclo
