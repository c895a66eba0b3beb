#include "lebx/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lebx/errors.hpp"

namespace lebx {

namespace {

// zeta(k) - 1 for k = 2..33; coefficients of the Taylor series of
// ln Gamma(2 + z) about z = 0.
constexpr std::array<long double, 32> kZetaMinusOne = {
    0.64493406684822643647L,       0.2020569031595942854L,
    0.082323233711138191516L,      0.036927755143369926331L,
    0.017343061984449139715L,      0.0083492773819228268398L,
    0.0040773561979443393787L,     0.0020083928260822144179L,
    0.00099457512781808533715L,    0.0004941886041194645587L,
    0.00024608655330804829864L,    0.00012271334757848914675L,
    6.1248135058704829259e-05L,    3.0588236307020493552e-05L,
    1.5282259408651871733e-05L,    7.6371976378997622736e-06L,
    3.8172932649998398565e-06L,    1.9082127165539389257e-06L,
    9.5396203387279611315e-07L,    4.7693298678780646312e-07L,
    2.3845050272773299e-07L,       1.1921992596531107307e-07L,
    5.9608189051259479612e-08L,    2.9803503514652280186e-08L,
    1.4901554828365041235e-08L,    7.450711789835429492e-09L,
    3.7253340247884570548e-09L,    1.8626597235130490064e-09L,
    9.3132743241966818287e-10L,    4.656629065033784073e-10L,
    2.328311833676505492e-10L,     1.1641550172700519776e-10L,
};

constexpr long double kOneMinusEulerGamma = 0.42278433509846713939L;

// B_{2k} / (2k (2k-1)), k = 1..8 (Stirling series for ln Gamma).
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0,          1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,     1.0 / 156.0,  -3617.0 / 122400.0,
};

// B_{2k} / (2k), k = 1..8 (asymptotic series for psi).
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,  1.0 / 12.0,  -3617.0 / 8160.0,
};

constexpr double kAsymptoticFrom = 10.0;

// ln Gamma(2 + z) for |z| <= 0.5.
template <class F>
F log_gamma_near_two(F z) {
    F sum = 0;
    F zk = z * z;
    F sign = 1;
    for (std::size_t k = 0; k < kZetaMinusOne.size(); ++k) {
        sum += sign * static_cast<F>(kZetaMinusOne[k]) * zk / static_cast<F>(k + 2);
        zk *= z;
        sign = -sign;
    }
    return static_cast<F>(kOneMinusEulerGamma) * z + sum;
}

template <class F>
F sin_pi_impl(F x) {
    // Reduce to r in [-1, 1] with sin(pi x) = sin(pi r).
    F r = x - 2 * std::round(x / 2);
    F sign = 1;
    if (r < 0) {
        r = -r;
        sign = -1;
    }
    if (r > F(0.5)) r = 1 - r;
    return sign * std::sin(std::numbers::pi_v<F> * r);
}

double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

bool is_exact_nonneg_integer(double v) { return v >= 0.0 && v == std::floor(v); }

// C(a, k) as the falling-factorial product a (a-1) ... (a-k+1) / k!.
double binom_falling(double a, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (a - k + j) / j;
    return r;
}

constexpr double kFallingMaxOrder = 100.0;

// Gamma(x) itself for |x| <= kDirectGammaLimit. Shifting into [1.5, 2.5) and
// exponentiating only the small remainder keeps the relative error near a few
// ulps, where going through ln Gamma loses about |ln Gamma(x)| ulps.
constexpr double kDirectGammaLimit = 100.0;

template <class F>
F gamma_direct(F x) {
    if (x < F(0.5)) return std::numbers::pi_v<F> / (sin_pi_impl(x) * gamma_direct(1 - x));
    F prod = 1;
    while (x >= F(2.5)) {
        x -= 1;
        prod *= x;
    }
    while (x < F(1.5)) {
        prod /= x;
        x += 1;
    }
    return prod * std::exp(log_gamma_near_two(x - 2));
}

template <class F>
bool direct_range(F a, F b) {
    return std::abs(a) < kDirectGammaLimit && std::abs(b) < kDirectGammaLimit && std::abs(a - b) < kDirectGammaLimit;
}

}  // namespace

SignedLog SignedLog::from_double(double x) {
    if (x == 0.0) return zero();
    return {x > 0 ? 1 : -1, std::log(std::abs(x))};
}

bool is_gamma_pole(double x) {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= kPoleTolerance;
}

double sin_pi(double x) { return sin_pi_impl(x); }

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    if (x >= kAsymptoticFrom) return log_gamma_stirling(x);
    if (x >= 2.5) {
        double prod = 1.0;
        while (x >= 2.5) {
            x -= 1.0;
            prod *= x;
        }
        return log_gamma_near_two(x - 2.0) + std::log(prod);
    }
    if (x >= 1.5) return log_gamma_near_two(x - 2.0);
    if (x >= 0.5) return log_gamma_near_two(x - 1.0) - std::log(x);
    // x in (0, 0.5): two upward steps land in [2, 2.5).
    return log_gamma_near_two(x) - std::log(x) - std::log1p(x);
}

std::optional<SignedLog> signed_gamma(double x) {
    if (is_gamma_pole(x)) return std::nullopt;
    if (x > 0.0) return SignedLog{1, log_gamma(x)};
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    const double s = sin_pi(x);
    return SignedLog{s > 0.0 ? 1 : -1,
                     std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma(1.0 - x)};
}

SignedLog gbinom_log(double a, double b) {
    const auto num = signed_gamma(a + 1.0);
    if (!num) throw DomainError("gbinom: numerator Gamma(a+1) has a pole at a = " + std::to_string(a));
    const auto den1 = signed_gamma(b + 1.0);
    const auto den2 = signed_gamma(a - b + 1.0);
    if (!den1 || !den2) return SignedLog::zero();
    return *num / (*den1 * *den2);
}

double gbinom(double a, double b) {
    if (is_gamma_pole(a + 1.0))
        throw DomainError("gbinom: numerator Gamma(a+1) has a pole at a = " + std::to_string(a));
    if (is_gamma_pole(b + 1.0) || is_gamma_pole(a - b + 1.0)) return 0.0;
    // Integer order: finite product, exact for small integer arguments.
    if (is_exact_nonneg_integer(b) && b <= kFallingMaxOrder)
        return binom_falling(a, static_cast<int>(b));
    const double c = a - b;
    if (is_exact_nonneg_integer(c) && c <= kFallingMaxOrder)
        return binom_falling(a, static_cast<int>(c));
    // Extended precision keeps a - b exact, which matters next to a pole of Gamma(a - b + 1).
    if (direct_range(a, b)) {
        const long double la = a, lb = b;
        return static_cast<double>(gamma_direct(la + 1) / gamma_direct(lb + 1) / gamma_direct(la - lb + 1));
    }
    return gbinom_log(a, b).to_double();
}

long double gbinom_extended(long double a, long double b) {
    if (!direct_range(a, b)) return gbinom(static_cast<double>(a), static_cast<double>(b));
    if (is_gamma_pole(static_cast<double>(a + 1)))
        throw DomainError("gbinom: numerator Gamma(a+1) has a pole at a = " + std::to_string(static_cast<double>(a)));
    if (is_gamma_pole(static_cast<double>(b + 1)) || is_gamma_pole(static_cast<double>(a - b + 1))) return 0;
    if (b >= 0 && b == std::floor(b)) {
        long double r = 1;
        const int k = static_cast<int>(b);
        for (int j = 1; j <= k; ++j) r = r * (a - k + j) / j;
        return r;
    }
    return gamma_direct(a + 1) / gamma_direct(b + 1) / gamma_direct(a - b + 1);
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be positive, got " + std::to_string(x));
    double shift = 0.0;
    while (x < kAsymptoticFrom) {
        shift += 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    double p = inv2;
    for (double c : kDigammaAsym) {
        series += c * p;
        p *= inv2;
    }
    return std::log(x) - 0.5 / x - series - shift;
}

}  // namespace lebx
