#include "lebx/bounds.hpp"

#include <cmath>
#include <numbers>

#include "lebx/errors.hpp"
#include "lebx/specfun.hpp"

namespace lebx {

namespace {

constexpr int kLogDomainFrom = 60;
constexpr int kBosLogFrom = 500;

// 2^e * m, through logs for large n so that intermediate powers never overflow.
double scaled_pow2(double e, double m, int n) {
    if (n <= kLogDomainFrom) return std::exp2(e) * m;
    return std::exp(e * std::numbers::ln2 + std::log(m));
}

}  // namespace

Theorem2Bound theorem2_bound(int n) {
    if (n < 4) throw DomainError("theorem2_bound: need n >= 4");
    const double e = std::numbers::e;
    const double ln = std::log(n);
    const double mu = scaled_pow2(-n / 3.0, 3.0 * e * n * ln * ln * ln, n) +
                      scaled_pow2(-static_cast<double>(n), e * n * static_cast<double>(n) * ln, n);
    const double bound =
        scaled_pow2(n + 1.0, (7.0 + mu) / (e * n * (ln - std::numbers::ln2)) * (1.0 + 15.0 / (n - 3)), n);
    return {bound, mu};
}

double turetskii_asymptote(int n) {
    if (n < 2) throw DomainError("turetskii_asymptote: need n >= 2");
    return scaled_pow2(n + 1.0, 1.0 / (std::numbers::e * n * std::log(n)), n);
}

double bos_bound_log(int n) {
    if (n < 1) throw DomainError("bos_bound: need n >= 1");
    return log_gamma(2.0 * n) - log_gamma(n + 1.0) - log_gamma(static_cast<double>(n));
}

double bos_bound(int n) {
    if (n < 1) throw DomainError("bos_bound: need n >= 1");
    if (n > kBosLogFrom) return std::exp(bos_bound_log(n));
    // C(2n-1, n) = prod_{k=1}^{n-1} (n + k) / k; exact while the value fits 53 bits.
    double c = 1.0;
    for (int k = 1; k < n; ++k) c = c * (n + k) / k;
    return std::round(c);
}

double rate_envelope(int n, double c) {
    if (n < 2) throw DomainError("rate_envelope: need n >= 2");
    if (!(c > 0.0)) throw DomainError("rate_envelope: need c > 0");
    return scaled_pow2(n, c / (n * std::log(n)), n);
}

BoundReport make_bound_report(int n, int d, std::optional<double> lambda_est) {
    BoundReport r;
    r.n = n;
    r.d = d;
    r.lambda_est = lambda_est;
    r.bos = bos_bound(n);
    if (n >= 4) {
        const auto t = theorem2_bound(n);
        r.theorem2 = t.bound;
        r.mu_cap = t.mu_cap;
    }
    if (n >= 2) r.turetskii = turetskii_asymptote(n);
    if (lambda_est) {
        r.ratios["bos"] = *lambda_est / r.bos;
        if (r.theorem2 > 0.0) r.ratios["theorem2"] = *lambda_est / r.theorem2;
        if (r.turetskii > 0.0) r.ratios["turetskii"] = *lambda_est / r.turetskii;
    }
    return r;
}

}  // namespace lebx
