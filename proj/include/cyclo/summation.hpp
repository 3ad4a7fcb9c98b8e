#ifndef CYCLO_SUMMATION_HPP
#define CYCLO_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace cyclo {

// Neumaier variant of compensated summation. Terms in the log-sine sums
// span many orders of magnitude, so a plain accumulator loses digits.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanSumComplex {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_, im_;
};

struct WilsonInterval {
    double low;
    double high;
};

// Wilson score interval for a binomial proportion.
inline WilsonInterval wilson_interval(long long successes, long long trials, double z) {
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {center - half, center + half};
}

} // namespace cyclo

#endif
