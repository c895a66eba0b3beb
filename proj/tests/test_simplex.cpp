#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "lebx/errors.hpp"
#include "lebx/simplex.hpp"
#include "oracles.hpp"

using namespace lebx;

TEST_CASE("node_count and enumeration size") {
    CHECK(node_count(2, 2) == 6.0);
    CHECK(node_count(10, 3) == 286.0);
    CHECK(node_count(0, 4) == 1.0);
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 12; ++n) CHECK(enumerate_multi_indices(n, d).size() == node_count(n, d));
}

TEST_CASE("enumeration is graded lexicographic with i_1 descending") {
    const NodeSet s = enumerate_multi_indices(2, 2);
    const std::vector<std::vector<int>> expected = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    REQUIRE(s.size() == expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(s.indices[k].entries() == expected[k]);
    const NodeSet big = enumerate_multi_indices(7, 3);
    CHECK(std::is_sorted(big.indices.begin(), big.indices.end(), [](const auto& a, const auto& b) { return a > b; }));
}

TEST_CASE("enumeration refuses node sets beyond the cap") {
    CHECK_THROWS_AS(enumerate_multi_indices(100, 4, 1000), ResourceError);
    CHECK_NOTHROW(enumerate_multi_indices(3, 2, 10));
}

TEST_CASE("MultiIndex validation") {
    CHECK_THROWS_AS(MultiIndex({1, -1, 2}), DomainError);
    CHECK_THROWS_AS(MultiIndex({3}), DomainError);
    const MultiIndex i({2, 1, 0});
    CHECK(i.degree() == 3);
    CHECK(i.dimension() == 2);
    CHECK_THROWS_AS(node_of(MultiIndex({0, 0})), DomainError);
    const Barycentric a = node_of(MultiIndex({1, 3}));
    CHECK(a[0] == 0.25);
    CHECK(a[1] == 0.75);
}

TEST_CASE("Barycentric validation and renormalization") {
    CHECK_THROWS_AS(Barycentric({0.5, 0.6}), BarycentricError);
    CHECK_THROWS_AS(Barycentric({1.0 + 1e-6, -1e-6}), BarycentricError);
    CHECK_THROWS_AS(Barycentric({1.0}), BarycentricError);
    const Barycentric clamped({1.0, -1e-13});
    CHECK(clamped[1] == 0.0);
    const Barycentric renorm({0.5 + 1e-10, 0.5});
    CHECK(std::abs(renorm[0] + renorm[1] - 1.0) <= 1e-16);
    const Barycentric c = Barycentric::centroid(3);
    CHECK(c.size() == 4);
    CHECK(c[2] == 0.25);
}

TEST_CASE("hand-expanded value at n = 2, d = 1") {
    // l_(2,0) = 0.375, l_(1,1) = 0.75, l_(0,2) = -0.125 at lambda = (0.75, 0.25).
    const Barycentric lam({0.75, 0.25});
    CHECK(fundamental_poly(MultiIndex({2, 0}), lam) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(fundamental_poly(MultiIndex({1, 1}), lam) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(fundamental_poly(MultiIndex({0, 2}), lam) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(lebesgue_function(lam, 2) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("Kronecker property at the nodes (exhaustive, n <= 8, d <= 2)") {
    for (int d = 1; d <= 2; ++d)
        for (int n = 1; n <= 8; ++n) {
            const NodeSet s = enumerate_multi_indices(n, d);
            for (const auto& j : s.indices) {
                const Barycentric a = node_of(j);
                for (const auto& i : s.indices) {
                    const double v = fundamental_poly(i, a);
                    CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) <= 1e-10);
                }
                CHECK(lebesgue_function(a, n) == doctest::Approx(1.0).epsilon(1e-10));
            }
        }
}

TEST_CASE("partition of unity at random points") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int d = 1 + t % 3;
        const int n = 1 + static_cast<int>(rng() % 30);
        const Barycentric lam(oracle::random_simplex_point(rng, d));
        double sum = 0.0;
        for (const auto& i : enumerate_multi_indices(n, d).indices) sum += fundamental_poly(i, lam);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(std::abs(sum - 1.0) <= 1e-9);
    }
}

TEST_CASE("direct, log-domain and gamma-ratio evaluation agree") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + t % 3;
        const int n = 1 + static_cast<int>(rng() % 25);
        const Barycentric lam(oracle::random_simplex_point(rng, d));
        const double direct = lebesgue_function(lam, n, EvalPath::direct);
        const double logd = lebesgue_function(lam, n, EvalPath::log_domain);
        CHECK(std::abs(direct - logd) <= 1e-12 * direct);
        const auto nodes = enumerate_multi_indices(n, d);
        for (std::size_t k = 0; k < nodes.size(); k += 7) {
            const double a = fundamental_poly(nodes.indices[k], lam, EvalPath::direct);
            const double b = fundamental_poly(nodes.indices[k], lam, EvalPath::log_domain);
            const double g = fundamental_poly_gamma(nodes.indices[k], lam);
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
            CHECK(std::abs(a - g) <= 1e-11 * std::max(1.0, std::abs(a)));
        }
    }
}

TEST_CASE("one-dimensional values match classical Lagrange interpolation") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 30; ++n) {
        const oracle::Lagrange1D ref(n);
        for (int t = 0; t < 50; ++t) {
            const double x = u(rng);
            const double v = lebesgue_function(Barycentric({1.0 - x, x}), n);
            CAPTURE(n);
            CAPTURE(x);
            CHECK(std::abs(v - ref(x)) <= 1e-11 * ref(x));
        }
    }
}

TEST_CASE("Lebesgue function is symmetric and at least one") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 20);
        auto c = oracle::random_simplex_point(rng, 2);
        const double v = lebesgue_function(Barycentric(c), n);
        CHECK(v >= 1.0 - 1e-12);
        std::sort(c.begin(), c.end());
        do {
            CHECK(std::abs(lebesgue_function(Barycentric(c), n) - v) <= 1e-12 * v);
        } while (std::next_permutation(c.begin(), c.end()));
    }
    CHECK(lebesgue_function(Barycentric::centroid(2), 0) == 1.0);
}

TEST_CASE("high degrees switch to the log domain without overflow") {
    const Barycentric lam({0.9, 0.07, 0.03});
    const double v = lebesgue_function(lam, 60);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v - lebesgue_function(lam, 60, EvalPath::direct)) <= 1e-10 * v);
}

TEST_CASE("lebesgue_terms sums to the Lebesgue function") {
    const Barycentric lam({0.5, 0.3, 0.2});
    const auto terms = lebesgue_terms(lam, 6);
    double s = 0.0;
    for (double t : terms) s += t;
    CHECK(s == doctest::Approx(lebesgue_function(lam, 6)).epsilon(1e-13));
}

TEST_CASE("interpolation reproduces polynomials of degree <= n") {
    const int n = 4;
    const NodeSet nodes = enumerate_multi_indices(n, 2);
    // f = 3 x^2 y - y^3 + 2 z in barycentric coordinates (x, y, z).
    const auto f = [](std::span<const double> c) { return 3 * c[0] * c[0] * c[1] - c[1] * c[1] * c[1] + 2 * c[2]; };
    std::map<MultiIndex, double> values;
    std::vector<double> ordered;
    for (const auto& i : nodes.indices) {
        const Barycentric a = node_of(i);
        values.emplace(i, f(a.coords()));
        ordered.push_back(f(a.coords()));
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Barycentric lam(oracle::random_simplex_point(rng, 2));
        CHECK(std::abs(interpolate(values, lam, n) - f(lam.coords())) <= 1e-12);
        CHECK(std::abs(interpolate(ordered, nodes, lam) - f(lam.coords())) <= 1e-12);
    }
    values.erase(values.begin());
    CHECK_THROWS_AS(interpolate(values, Barycentric::centroid(2), n), MissingNodeError);
    ordered.pop_back();
    CHECK_THROWS_AS(interpolate(ordered, nodes, Barycentric::centroid(2)), MissingNodeError);
}
