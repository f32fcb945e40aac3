#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace dirtail {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(e^a + e^b)
inline double log_add(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    if (b > a) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

inline double log_sum_exp(std::span<const double> xs) {
    double m = neg_inf;
    for (double x : xs) m = std::max(m, x);
    if (m == neg_inf) return neg_inf;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

// log1p(x) - x, stable for small |x|
inline double log1p_minus_x(double x) {
    if (std::abs(x) > 0.5) return std::log1p(x) - x;
    // sum_{k>=2} (-1)^{k+1} x^k / k
    double term = x;
    double s = 0.0;
    for (int k = 2; k < 64; ++k) {
        term *= -x;
        double add = term / k;
        s += add;
        if (std::abs(add) < 1e-18 * (std::abs(s) + 1e-300)) break;
    }
    return s;
}

// Upper tail of the standard normal.
inline double norm_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// log of the upper normal tail, valid far into the tail where erfc underflows.
inline double log_norm_sf(double z) {
    if (z < 8.0) {
        double p = norm_sf(z);
        if (p > 0.0) return std::log(p);
    }
    // asymptotic: log(phi(z)/z) + log(1 - 1/z^2 + 3/z^4 - 15/z^6 + ...)
    const double z2 = z * z;
    double term = 1.0, series = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -(2.0 * k - 1.0) / z2;
        series += term;
    }
    return -0.5 * z2 - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(z) +
           std::log(series);
}

// Neumaier-compensated accumulator.
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

} // namespace dirtail
