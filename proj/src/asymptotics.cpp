#include "setfam/asymptotics.hpp"

#include <cmath>

namespace setfam {

ExactRatio ratio_exact(int n, int k, int t, int i) {
    if (i < 0 || i > t || t > n || k > n || k < 0) {
        throw std::domain_error("ratio_exact needs 0 <= i <= t <= n and 0 <= k <= n");
    }
    const BigCount denom = binom(n, k);
    if (denom == 0) {
        throw std::domain_error("ratio_exact needs binom(n,k) > 0");
    }
    return ExactRatio(binom(n - t, k - i), denom);
}

double ratio_limit(double alpha, int t, int i) {
    if (i < 0 || i > t) {
        throw std::domain_error("ratio_limit needs 0 <= i <= t");
    }
    return std::pow(alpha, i) * std::pow(1.0 - alpha, t - i);
}

std::pair<double, double> threshold_limits(double alpha, int t) {
    if (t < 2) {
        throw std::domain_error("threshold_limits needs t >= 2");
    }
    const double q = 1.0 - alpha;
    const double limit_a = std::pow(q, t) + std::pow(alpha, t - 1) * q;
    const double limit_b = 1.0 - std::pow(q, t);
    return {limit_a, limit_b};
}

double f1(double alpha) {
    const double a3 = alpha * alpha * alpha;
    return a3 * (5.0 + alpha * (-10.0 + alpha * (6.0 - alpha)));
}

double f2(double alpha) {
    const double a3 = alpha * alpha * alpha;
    return a3 * (10.0 + alpha * (-25.0 + alpha * (21.0 - 6.0 * alpha)));
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("bisect_root needs tol > 0");
    }
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw std::invalid_argument("bisect_root needs a sign change on [lo, hi]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;  // interval no longer representable
        }
        const double f_mid = f(mid);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CubicWarmupBound cubic_warmup_bound(int n, int k) {
    if (k < 2 || n < k) {
        throw std::domain_error("cubic_warmup_bound needs n >= k >= 2");
    }
    CubicWarmupBound out;
    out.bound = BigCount(k) * k * binom(n - 2, k - 2);
    out.half_star = ExactRatio(binom(n - 1, k - 1), 2);
    out.holds = ExactRatio(out.bound) < out.half_star;
    return out;
}

double to_double(const ExactRatio& value) {
    BigCount num = boost::multiprecision::numerator(value);
    BigCount den = boost::multiprecision::denominator(value);
    if (num == 0) {
        return 0.0;
    }
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    // Shift both parts into a 64-bit window and track the scale difference.
    const auto bits_num = static_cast<long>(boost::multiprecision::msb(num));
    const auto bits_den = static_cast<long>(boost::multiprecision::msb(den));
    long shift_num = bits_num - 62;
    long shift_den = bits_den - 62;
    if (shift_num > 0) {
        num >>= shift_num;
    } else {
        shift_num = 0;
    }
    if (shift_den > 0) {
        den >>= shift_den;
    } else {
        shift_den = 0;
    }
    const double approx =
        num.convert_to<double>() / den.convert_to<double>();
    const double scaled = std::ldexp(approx, static_cast<int>(shift_num - shift_den));
    return negative ? -scaled : scaled;
}

}  // namespace setfam
