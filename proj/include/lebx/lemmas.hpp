#pragma once

#include <span>
#include <utility>

namespace lebx {

/// One side-by-side comparison of an identity or an inequality.
struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;  // |lhs - rhs| / max(|lhs|, |rhs|, 1e-300)
    bool holds = false;
};

inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kInequalityTolerance = 1e-9;

/// holds iff rel_err <= tol.
IdentityCheck identity_check(double lhs, double rhs, double tol = kIdentityTolerance);
/// holds iff lhs <= rhs + tol.
IdentityCheck inequality_check(double lhs, double rhs, double tol = kInequalityTolerance);

/// Both sides of the binomial identities, generic over the number type so that
/// integer parameters can be checked in exact rational arithmetic. C(a, b) is
/// supplied by the caller. Empty sums are 0.
namespace lemma_sides {

template <class T, class Binom>
std::pair<T, T> lemma3(const T& a, const T& b, Binom C) {
    const T one(1);
    T lhs = one / (b * C(a - one, b)) - one / ((b + one) * C(a, b + one));
    T rhs = one / (b * C(a, b));
    return {lhs, rhs};
}

template <class T, class Binom>
std::pair<T, T> lemma4(int p, int m, const T& x, const T& y, Binom C) {
    const T one(1);
    T first(0), second(0), rhs(0);
    for (int k = 0; k <= p + 1; ++k) first += C(x + one, T(k)) / (y * C(T(m - k), y));
    for (int k = 0; k <= p; ++k) second += C(x, T(k)) / ((y + one) * C(T(m - k), y + one));
    for (int k = 0; k <= p; ++k) rhs += T(2) * C(x, T(k)) / (y * C(T(m - k), y));
    rhs += C(x, T(p + 1)) / (y * C(T(m - p - 1), y));
    return {first - second, rhs};
}

template <class T, class Binom>
std::pair<T, T> lemma5(int m, int q, int r, const T& x, const T& y, Binom C) {
    const T one(1);
    T first(0), second(0);
    for (int k = q; k <= m - 1 - r; ++k) first += one / ((x + one) * C(T(m - k), x + one) * y * C(T(k), y));
    for (int k = q + 1; k <= m - r; ++k) second += one / (x * C(T(m - k), x) * (y + one) * C(T(k), y + one));
    T rhs = one / (x * C(T(r), x) * y * C(T(m - r), y)) - one / (x * C(T(m - q), x) * y * C(T(q), y));
    return {first - second, rhs};
}

template <class T, class Binom>
std::pair<T, T> lemma6(int p, int q, int m, const T& x, const T& y, Binom C) {
    const T one(1);
    T first(0), second(0);
    for (int k = q; k <= p; ++k) first += C(x, T(k)) * C(y, T(m - k));
    for (int k = q - 1; k <= p - 1; ++k) second += C(x - one, T(k)) * C(y + one, T(m - k));
    T rhs = C(x - one, T(p)) * C(y, T(m - p)) - C(x - one, T(q - 1)) * C(y, T(m - q + 1));
    return {first - second, rhs};
}

}  // namespace lemma_sides

/// 1/(b C(a-1,b)) - 1/((b+1) C(a,b+1)) against 1/(b C(a,b)). Requires b != 0;
/// a pole in a binomial or a vanishing denominator throws DomainError.
IdentityCheck lemma3(double a, double b, double tol = kIdentityTolerance);

/// D*(p, m, x, y) against its closed form. Requires p >= 0 and m > p + 1.
IdentityCheck lemma4_dstar(int p, int m, double x, double y, double tol = kIdentityTolerance);

/// D**(m, q, r, x, y) against its closed form. Requires 1 <= q <= m - 1 - r, r >= 0.
IdentityCheck lemma5_dstarstar(int m, int q, int r, double x, double y, double tol = kIdentityTolerance);

/// D***(p, q, m, x, y) against its closed form. Requires q <= p + 1; at q = p + 1
/// both sums are empty and the closed form cancels, so both sides are 0.
IdentityCheck lemma6_dtriplestar(int p, int q, int m, double x, double y, double tol = kIdentityTolerance);

/// True iff Gamma(a + t) / Gamma(b + t) is nondecreasing over the sorted grid when
/// a >= b and nonincreasing when b > a, allowing a relative slack of 1e-12.
/// Throws DomainError if a + t or b + t is not positive for some grid value.
bool lemma7_monotone(double a, double b, std::span<const double> alpha_grid);

/// Phi(alpha, m) = (sin(pi alpha)/pi) Gamma(1+alpha) Gamma(m-alpha) / m! against
/// alpha (1-alpha) 2^alpha / m^{1+alpha}. For m = 1 the check is the equality Phi = alpha.
/// Requires 0 < alpha < 1 and m >= 1.
IdentityCheck lemma17_phi(double alpha, int m, double tol = kInequalityTolerance);

/// alpha / m^alpha against 1/(e ln m). Requires alpha > 0 and m > 1; the bound
/// holds for every alpha > 0 and is attained at alpha = 1/ln m.
IdentityCheck lemma18_phi_small(double alpha, double m, double tol = kInequalityTolerance);

/// sum_{s=1}^n 2^s/s against 2^{n+1}/n + 2^{n+1}/(n-3)^2. Requires n >= 4.
IdentityCheck lemma19_powsum(int n, double tol = kInequalityTolerance);

/// sum_{s=2}^n C(n,s)/(s-1) against (2^{n+1}/n)(1 + 15/(n-3)). Requires n >= 4.
IdentityCheck lemma25_upsilon(int n, double tol = kInequalityTolerance);

/// ((ln 2)^2 + 12 ln 2 + 28) / (4 ln 2 + 12).
double c0_constant();

}  // namespace lebx
