#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lebx/errors.hpp"
#include "lebx/lemmas.hpp"
#include "lebx/suites.hpp"
#include "oracles.hpp"

using namespace lebx;
using oracle::Rational;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("check helpers") {
    const auto id = identity_check(1.0, 1.0 + 1e-12);
    CHECK(id.holds);
    CHECK(id.rel_err == doctest::Approx(1e-12).epsilon(1e-3));
    CHECK_FALSE(identity_check(1.0, 1.1).holds);
    CHECK(identity_check(0.0, 0.0).rel_err == 0.0);
    CHECK(inequality_check(1.0, 1.0 - 1e-10).holds);
    CHECK_FALSE(inequality_check(1.0, 0.99).holds);
}

TEST_CASE("lemma 3") {
    const auto c = lemma3(5, 2);  // 1/12 - 1/30 = 1/20
    CHECK(c.holds);
    CHECK(rel(c.lhs, 0.05) <= 1e-15);
    CHECK(rel(c.rhs, 0.05) <= 1e-15);
    CHECK(lemma3(3, 2).holds);
    const auto r = lemma3(4.5, 1.5);
    CHECK(r.rel_err <= 1e-10);
    CHECK(rel(r.rhs, 0.1015873015873015873) <= 1e-14);
    CHECK_THROWS_AS(lemma3(4, 0), DomainError);
    CHECK_THROWS_AS(lemma3(-1, 0.5), DomainError);
}

TEST_CASE("lemma 4") {
    const auto c = lemma4_dstar(0, 5, 1, 1);
    CHECK(c.holds);
    CHECK(rel(c.lhs, 0.65) <= 1e-15);
    CHECK(rel(c.rhs, 0.65) <= 1e-15);
    // x = 0 keeps only the kappa = 0 terms.
    const auto z = lemma4_dstar(3, 8, 0, 1.5);
    CHECK(z.holds);
    const auto r = lemma4_dstar(2, 10, 2.3, 1.7);
    CHECK(r.rel_err <= 1e-10);
    CHECK(rel(r.rhs, 0.23659423504122786266) <= 1e-14);
    CHECK_THROWS_AS(lemma4_dstar(3, 4, 1.5, 1.5), DomainError);
}

TEST_CASE("lemma 5") {
    const auto sym = lemma5_dstarstar(6, 1, 1, 1, 1);
    CHECK(sym.lhs == doctest::Approx(0.0).scale(1e-15));
    CHECK(sym.rhs == doctest::Approx(0.0).scale(1e-15));
    const auto c = lemma5_dstarstar(6, 1, 2, 1, 1);
    CHECK(c.holds);
    CHECK(rel(c.lhs, -0.075) <= 1e-14);
    const auto r = lemma5_dstarstar(9, 2, 3, 1.4, 0.6);
    CHECK(r.rel_err <= 1e-10);
    CHECK(rel(r.rhs, 0.049181030457670547075) <= 1e-14);
    CHECK_THROWS_AS(lemma5_dstarstar(6, 5, 2, 1.5, 1.5), DomainError);
}

TEST_CASE("lemma 6") {
    const auto c = lemma6_dtriplestar(2, 1, 3, 3, 2);
    CHECK(c.holds);
    CHECK(c.lhs == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.rhs == doctest::Approx(2.0).epsilon(1e-15));
    const auto r = lemma6_dtriplestar(3, 1, 4, 2.5, 1.5);
    CHECK(r.rel_err <= 1e-10);
    CHECK(rel(r.rhs, -0.1171875) <= 1e-14);
    // q = p + 1: both sums are empty and the closed form cancels.
    const auto e = lemma6_dtriplestar(2, 3, 4, 2.5, 1.5);
    CHECK(e.lhs == 0.0);
    CHECK(e.rhs == 0.0);
    CHECK(e.holds);
    CHECK_THROWS_AS(lemma6_dtriplestar(2, 4, 4, 2.5, 1.5), DomainError);
}

TEST_CASE("binomial identities hold exactly in rational arithmetic") {
    const oracle::RationalBinom C;
    using lemma_sides::lemma3;
    using lemma_sides::lemma4;
    using lemma_sides::lemma5;
    using lemma_sides::lemma6;
    int cases = 0;
    for (int b = 1; b <= 8; ++b)
        for (int a = b + 1; a <= 14; ++a) {
            const auto [l, r] = lemma3<Rational>(a, b, C);
            CHECK(l == r);
            ++cases;
        }
    CHECK(lemma3<Rational>(5, 2, C).first == Rational(1, 20));
    for (int p = 0; p <= 6; ++p)
        for (int m = p + 2; m <= 10; ++m)
            for (int x = 0; x <= 5; ++x)
                for (int y = 1; y <= m - p - 1; ++y) {
                    const auto [l, r] = lemma4<Rational>(p, m, x, y, C);
                    CHECK(l == r);
                    ++cases;
                }
    CHECK(lemma4<Rational>(0, 5, 1, 1, C).first == Rational(13, 20));
    for (int m = 2; m <= 10; ++m)
        for (int r = 1; r <= m - 2; ++r)
            for (int q = 1; q <= m - 1 - r; ++q)
                for (int x = 1; x <= r; ++x)
                    for (int y = 1; y <= q; ++y) {
                        const auto [l, rr] = lemma5<Rational>(m, q, r, x, y, C);
                        CHECK(l == rr);
                        ++cases;
                    }
    CHECK(lemma5<Rational>(6, 1, 2, 1, 1, C).first == Rational(-3, 40));
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; q <= p; ++q)
            for (int m = 0; m <= 10; ++m)
                for (int x = 1; x <= 6; ++x)
                    for (int y = 0; y <= 6; ++y) {
                        const auto [l, r] = lemma6<Rational>(p, q, m, x, y, C);
                        CHECK(l == r);
                        ++cases;
                    }
    CHECK(lemma6<Rational>(2, 1, 3, 3, 2, C).first == Rational(2));
    CHECK(cases > 3000);
}

TEST_CASE("lemma 7 monotonicity verdicts") {
    const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    CHECK(lemma7_monotone(3, 1, grid));
    CHECK(lemma7_monotone(1, 3, grid));
    CHECK(lemma7_monotone(2.5, 2.5, grid));
    // A grid given out of order is sorted first.
    CHECK(lemma7_monotone(3, 1, std::vector<double>{0.9, 0.1, 0.5}));
    CHECK_THROWS_AS(lemma7_monotone(-1, 1, grid), DomainError);
}

TEST_CASE("lemma 17") {
    const auto c = lemma17_phi(0.5, 4);
    CHECK(rel(c.lhs, 5.0 / 128.0) <= 1e-14);
    CHECK(c.rhs == doctest::Approx(0.0441941738).epsilon(1e-9));
    CHECK(c.holds);
    for (double a : {0.1, 0.37, 0.5, 0.99}) {
        const auto one = lemma17_phi(a, 1);
        CHECK(one.holds);
        CHECK(rel(one.lhs, a) <= 1e-14);
    }
    // m = 2 is an equality for every alpha.
    const auto two = lemma17_phi(0.3, 2);
    CHECK(rel(two.lhs, two.rhs) <= 1e-14);
    CHECK(lemma17_phi(1e-9, 10).lhs < 1e-9);
    CHECK_THROWS_AS(lemma17_phi(1.0, 3), DomainError);
    CHECK_THROWS_AS(lemma17_phi(0.5, 0), DomainError);
}

TEST_CASE("lemma 18") {
    const auto at_max = lemma18_phi_small(1.0 / std::log(10.0), 10);
    CHECK(rel(at_max.lhs, 0.15976801130640935267) <= 1e-14);
    CHECK(rel(at_max.rhs, 0.15976801130640935267) <= 1e-14);
    CHECK(at_max.holds);
    const auto one = lemma18_phi_small(1.0, 10);
    CHECK(one.lhs == doctest::Approx(0.1));
    CHECK(one.holds);
    CHECK(lemma18_phi_small(1e-12, 10).lhs < 1e-11);
    CHECK_THROWS_AS(lemma18_phi_small(0.0, 10), DomainError);
    CHECK_THROWS_AS(lemma18_phi_small(0.5, 1.0), DomainError);
}

TEST_CASE("lemma 19 against exact partial sums") {
    CHECK(lemma19_powsum(4).lhs == doctest::Approx(32.0 / 3.0).epsilon(1e-15));
    CHECK(lemma19_powsum(4).rhs == 40.0);
    CHECK(lemma19_powsum(5).lhs == doctest::Approx(256.0 / 15.0).epsilon(1e-15));
    CHECK(lemma19_powsum(5).rhs == doctest::Approx(28.8).epsilon(1e-15));
    for (int n = 4; n <= 60; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k) s += Rational(oracle::BigInt(1) << k, k);
        const auto c = lemma19_powsum(n);
        CAPTURE(n);
        CHECK(rel(c.lhs, static_cast<double>(s)) <= 1e-15);
        CHECK(c.holds);
    }
    CHECK_THROWS_AS(lemma19_powsum(3), DomainError);
}

TEST_CASE("lemma 25 against exact sums") {
    CHECK(lemma25_upsilon(4).lhs == doctest::Approx(25.0 / 3.0).epsilon(1e-15));
    CHECK(lemma25_upsilon(4).rhs == 128.0);
    for (int n = 4; n <= 60; ++n) {
        Rational s(0);
        for (int k = 2; k <= n; ++k) s += Rational(oracle::binomial(n, k), k - 1);
        const auto c = lemma25_upsilon(n);
        CAPTURE(n);
        CHECK(rel(c.lhs, static_cast<double>(s)) <= 1e-14);
        CHECK(c.holds);
    }
    CHECK(lemma25_upsilon(50).lhs < lemma25_upsilon(50).rhs);
    CHECK_THROWS_AS(lemma25_upsilon(2), DomainError);
}

TEST_CASE("the constant C0") {
    CHECK(rel(c0_constant(), 2.4909797377110147732) <= 1e-15);
    CHECK(c0_constant() < 2.5);
    CHECK(c0_constant() > 2.4);
}

TEST_CASE("identity and inequality suites pass") {
    SuiteOptions opt;
    opt.trials = 300;
    opt.seed = 9;
    const auto ids = run_identity_suite(opt);
    CHECK(ids.passed());
    for (const auto& g : ids.groups) {
        CAPTURE(g.name);
        CHECK(g.cases > 0);
        if (g.metric == "rel_err") CHECK(g.worst <= 1e-10);
    }
    const auto ineq = run_inequality_suite(opt);
    CHECK(ineq.passed());
    CHECK_THROWS_AS(run_suite("nonsense", opt), DomainError);
}

TEST_CASE("suite reports list failing parameters") {
    SuiteOptions opt;
    opt.trials = 50;
    opt.tol = 0.0;  // nothing survives an exact comparison
    const auto ids = run_identity_suite(opt);
    CHECK_FALSE(ids.passed());
    bool listed = false;
    for (const auto& g : ids.groups) listed = listed || !g.failed.empty();
    CHECK(listed);
}
