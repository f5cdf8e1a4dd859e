#ifndef SETFAM_ASYMPTOTICS_HPP
#define SETFAM_ASYMPTOTICS_HPP

#include <functional>
#include <utility>

#include "setfam/core.hpp"

namespace setfam {

struct CubicWarmupBound {
    BigCount bound;        // k^2 * binom(n-2,k-2)
    ExactRatio half_star;  // binom(n-1,k-1) / 2
    bool holds = false;    // bound < half_star
};

// Exact rational binom(n-t,k-i) / binom(n,k).
ExactRatio ratio_exact(int n, int k, int t, int i);

// Limit of that ratio along k = alpha*n: alpha^i * (1-alpha)^(t-i).
double ratio_limit(double alpha, int t, int i);

// Limit fractions of the two threshold-pair sizes relative to
// binom(n-1,k-1): ((1-a)^t + a^(t-1)(1-a), 1 - (1-a)^t).
std::pair<double, double> threshold_limits(double alpha, int t);

double f1(double alpha);  // 5a^3 - 10a^4 + 6a^5 - a^6
double f2(double alpha);  // 10a^3 - 25a^4 + 21a^5 - 6a^6

// Bisection on a bracketing interval; requires a sign change.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

// The cubic-range comparison k^2*binom(n-2,k-2) vs binom(n-1,k-1)/2,
// decided in exact arithmetic.
CubicWarmupBound cubic_warmup_bound(int n, int k);

// Lossless-enough conversion for huge rationals: converts through a
// 64-bit mantissa window instead of converting numerator and denominator
// separately (which would overflow to inf/inf).
double to_double(const ExactRatio& value);

}  // namespace setfam

#endif
