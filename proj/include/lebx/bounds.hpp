#pragma once

#include <map>
#include <optional>
#include <string>

namespace lebx {

struct Theorem2Bound {
    double bound = 0.0;
    double mu_cap = 0.0;
};

/// mu_cap = 3 e n (ln n)^3 / 2^{n/3} + e n^2 ln n / 2^n and
/// bound = (7 + mu_cap) 2^{n+1} / (e n (ln n - ln 2)) (1 + 15/(n-3)).
/// Requires n >= 4. Powers of two are formed in the log domain above n = 60.
Theorem2Bound theorem2_bound(int n);

/// 2^{n+1} / (e n ln n), the leading term of the one-dimensional constant. Requires n >= 2.
double turetskii_asymptote(int n);

/// C(2n-1, n). Requires n >= 1. Overflows to +inf beyond double range; use
/// bos_bound_log there.
double bos_bound(int n);

/// ln C(2n-1, n).
double bos_bound_log(int n);

/// c 2^n / (n ln n). Requires n >= 2 and c > 0.
double rate_envelope(int n, double c);

/// Bounds at one degree next to an estimate of the constant.
struct BoundReport {
    int n = 0;
    int d = 0;
    std::optional<double> lambda_est;
    double theorem2 = 0.0;  // 0 when n < 4
    double mu_cap = 0.0;
    double bos = 0.0;
    double turetskii = 0.0;  // 0 when n < 2
    std::map<std::string, double> ratios;  // lambda_est / bound, keyed by bound name
};

/// Fills every bound defined at n, and the ratios when lambda_est is given.
BoundReport make_bound_report(int n, int d, std::optional<double> lambda_est);

}  // namespace lebx
