#include "lebx/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lebx/detail/compensated_sum.hpp"
#include "lebx/errors.hpp"
#include "lebx/specfun.hpp"

namespace lebx {

namespace {

double relative_error(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

// The identity sums cancel by up to five orders of magnitude at moderate
// parameters, so both sides are accumulated in extended precision.
using Wide = long double;

struct WideBinom {
    Wide operator()(Wide a, Wide b) const { return gbinom_extended(a, b); }
};

IdentityCheck finite_identity(const char* who, std::pair<Wide, Wide> sides, double tol) {
    if (!std::isfinite(sides.first) || !std::isfinite(sides.second))
        throw DomainError(std::string(who) + ": a binomial in a denominator vanishes");
    const Wide diff = std::abs(sides.first - sides.second);
    const Wide scale = std::max({std::abs(sides.first), std::abs(sides.second), Wide(1e-300)});
    const double err = static_cast<double>(diff / scale);
    return {static_cast<double>(sides.first), static_cast<double>(sides.second), err, err <= tol};
}

}  // namespace

IdentityCheck identity_check(double lhs, double rhs, double tol) {
    const double err = relative_error(lhs, rhs);
    return {lhs, rhs, err, err <= tol};
}

IdentityCheck inequality_check(double lhs, double rhs, double tol) {
    return {lhs, rhs, relative_error(lhs, rhs), lhs <= rhs + tol};
}

IdentityCheck lemma3(double a, double b, double tol) {
    if (b == 0.0) throw DomainError("lemma3: b must be nonzero");
    return finite_identity("lemma3", lemma_sides::lemma3<Wide>(a, b, WideBinom{}), tol);
}

IdentityCheck lemma4_dstar(int p, int m, double x, double y, double tol) {
    if (p < 0 || m <= p + 1) throw DomainError("lemma4_dstar: need p >= 0 and m > p + 1");
    return finite_identity("lemma4_dstar", lemma_sides::lemma4<Wide>(p, m, x, y, WideBinom{}), tol);
}

IdentityCheck lemma5_dstarstar(int m, int q, int r, double x, double y, double tol) {
    if (r < 0 || q < 1 || q > m - 1 - r) throw DomainError("lemma5_dstarstar: need r >= 0 and 1 <= q <= m - 1 - r");
    return finite_identity("lemma5_dstarstar", lemma_sides::lemma5<Wide>(m, q, r, x, y, WideBinom{}), tol);
}

IdentityCheck lemma6_dtriplestar(int p, int q, int m, double x, double y, double tol) {
    if (q > p + 1) throw DomainError("lemma6_dtriplestar: need q <= p + 1");
    return finite_identity("lemma6_dtriplestar", lemma_sides::lemma6<Wide>(p, q, m, x, y, WideBinom{}), tol);
}

bool lemma7_monotone(double a, double b, std::span<const double> alpha_grid) {
    std::vector<double> grid(alpha_grid.begin(), alpha_grid.end());
    std::sort(grid.begin(), grid.end());
    std::vector<double> g;
    g.reserve(grid.size());
    for (double t : grid) {
        if (!(a + t > 0.0) || !(b + t > 0.0)) throw DomainError("lemma7_monotone: gamma arguments must be positive");
        g.push_back(std::exp(log_gamma(a + t) - log_gamma(b + t)));
    }
    const bool increasing = a >= b;
    for (std::size_t k = 1; k < g.size(); ++k) {
        const double slack = 1e-12 * std::max(std::abs(g[k]), std::abs(g[k - 1]));
        if (increasing ? g[k] < g[k - 1] - slack : g[k] > g[k - 1] + slack) return false;
    }
    return true;
}

IdentityCheck lemma17_phi(double alpha, int m, double tol) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("lemma17_phi: need 0 < alpha < 1");
    if (m < 1) throw DomainError("lemma17_phi: need m >= 1");
    const double phi = sin_pi(alpha) / std::numbers::pi *
                       std::exp(log_gamma(1.0 + alpha) + log_gamma(m - alpha) - log_gamma(m + 1.0));
    if (m == 1) return identity_check(phi, alpha, kIdentityTolerance);
    const double bound = alpha * (1.0 - alpha) * std::exp2(alpha) / std::pow(static_cast<double>(m), 1.0 + alpha);
    return inequality_check(phi, bound, tol);
}

IdentityCheck lemma18_phi_small(double alpha, double m, double tol) {
    if (!(alpha > 0.0)) throw DomainError("lemma18_phi_small: need alpha > 0");
    if (!(m > 1.0)) throw DomainError("lemma18_phi_small: need m > 1");
    return inequality_check(alpha / std::pow(m, alpha), 1.0 / (std::numbers::e * std::log(m)), tol);
}

IdentityCheck lemma19_powsum(int n, double tol) {
    if (n < 4) throw DomainError("lemma19_powsum: need n >= 4");
    detail::CompensatedSum sum;
    for (int s = 1; s <= n; ++s) sum.add(std::ldexp(1.0, s) / s);
    const double p = std::ldexp(1.0, n + 1);
    const double rhs = p / n + p / ((n - 3.0) * (n - 3.0));
    return inequality_check(sum.value(), rhs, tol);
}

IdentityCheck lemma25_upsilon(int n, double tol) {
    if (n < 4) throw DomainError("lemma25_upsilon: need n >= 4");
    detail::CompensatedSum sum;
    double c = n;  // C(n, 1)
    for (int s = 2; s <= n; ++s) {
        c = c * (n - s + 1) / s;
        sum.add(c / (s - 1));
    }
    const double rhs = std::ldexp(1.0, n + 1) / n * (1.0 + 15.0 / (n - 3));
    return inequality_check(sum.value(), rhs, tol);
}

double c0_constant() {
    const double l2 = std::numbers::ln2;
    return (l2 * l2 + 12.0 * l2 + 28.0) / (4.0 * l2 + 12.0);
}

}  // namespace lebx
