#pragma once

#include <cmath>
#include <optional>

namespace lebx {

/// Real number stored as sign and natural log of the magnitude.
///
/// Quotients of gamma functions overflow double precision long before the
/// quotient itself does, so they are formed here and exponentiated once.
struct SignedLog {
    int sign = 0;          // -1, 0, +1; 0 is an exact zero
    double log_abs = 0.0;  // meaningless when sign == 0

    static SignedLog zero() { return {0, 0.0}; }
    static SignedLog one() { return {1, 0.0}; }
    static SignedLog from_double(double x);

    bool is_zero() const { return sign == 0; }
    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    friend SignedLog operator*(SignedLog a, SignedLog b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }
    /// Division by an exact zero is a caller bug; the result is undefined.
    friend SignedLog operator/(SignedLog a, SignedLog b) {
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.log_abs - b.log_abs};
    }
};

/// Pole tolerance for the gamma function: x is a pole iff round(x) <= 0 and
/// |x - round(x)| <= kPoleTolerance.
inline constexpr double kPoleTolerance = 1e-9;

bool is_gamma_pole(double x);

/// sin(pi x) with exact argument reduction, so sin_pi(k) == 0 for integer k.
double sin_pi(double x);

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Sign and log-magnitude of Gamma(x); std::nullopt at a pole.
std::optional<SignedLog> signed_gamma(double x);

/// Generalized binomial coefficient Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)).
/// A denominator pole with a finite numerator yields 0; a numerator pole
/// throws DomainError.
double gbinom(double a, double b);

/// gbinom in extended precision (long double) while |a|, |b| and |a - b| stay
/// below 100; plain gbinom beyond. For sums whose terms cancel heavily.
long double gbinom_extended(long double a, long double b);

/// Same quantity kept in the log domain.
SignedLog gbinom_log(double a, double b);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0. Throws DomainError otherwise.
double digamma(double x);

}  // namespace lebx
