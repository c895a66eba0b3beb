#include "lebx/decomposition.hpp"

#include <cmath>
#include <string>

#include "lebx/detail/compensated_sum.hpp"
#include "lebx/errors.hpp"
#include "lebx/specfun.hpp"

namespace lebx {

namespace {

constexpr double kHypothesisSlack = 1e-12;

std::string describe(const NodeOffset& o) {
    return "n=" + std::to_string(o.n) + " r=(" + std::to_string(o.r[0]) + "," + std::to_string(o.r[1]) + "," +
           std::to_string(o.r[2]) + ") alpha=(" + std::to_string(o.alpha[0]) + "," + std::to_string(o.alpha[1]) +
           "," + std::to_string(o.alpha[2]) + ")";
}

bool holds_within_tolerance(double lhs, double rhs) {
    return lhs <= rhs + kReductionAbsTolerance + kReductionRelTolerance * std::abs(rhs);
}

}  // namespace

NodeOffset NodeOffset::make(int n, std::array<int, 3> r, std::array<double, 3> alpha) {
    NodeOffset o{n, r, alpha};
    if (n < 1) throw DomainError("NodeOffset: n must be >= 1");
    if (r[0] < 0 || r[1] < 0 || r[2] < 0) throw DomainError("NodeOffset: negative r in " + describe(o));
    if (r[0] + r[1] + r[2] != n - 1) throw DomainError("NodeOffset: r must sum to n - 1 in " + describe(o));
    if (alpha[0] < -1.0 || alpha[0] > 1.0) throw DomainError("NodeOffset: alpha_1 outside [-1, 1] in " + describe(o));
    for (int s = 1; s < 3; ++s)
        if (alpha[s] < 0.0 || alpha[s] > 1.0)
            throw DomainError("NodeOffset: alpha_2, alpha_3 must lie in [0, 1] in " + describe(o));
    if (std::abs(alpha[0] + alpha[1] + alpha[2] - 1.0) > kAlphaSumTolerance)
        throw DomainError("NodeOffset: alphas must sum to 1 in " + describe(o));
    for (int s = 0; s < 3; ++s) {
        const double lam = (r[s] + alpha[s]) / n;
        if (lam < -Barycentric::kNegativeTolerance || lam > 1.0 + Barycentric::kNegativeTolerance)
            throw DomainError("NodeOffset: reconstructed point leaves the triangle in " + describe(o));
    }
    return o;
}

Barycentric NodeOffset::point() const {
    return Barycentric({(r[0] + alpha[0]) / n, (r[1] + alpha[1]) / n, (r[2] + alpha[2]) / n});
}

NodeOffset NodeOffset::shifted() const {
    if (r[0] == 0) throw DomainError("NodeOffset::shifted: r_1 = 0 in " + describe(*this));
    return make(n, {r[0] - 1, r[1], r[2] + 1}, alpha);
}

NodeOffset offsets_of(const Barycentric& lambda, int n) {
    if (lambda.dimension() != 2) throw DomainError("offsets_of: defined for the triangle (d = 2) only");
    if (n < 1) throw DomainError("offsets_of: n must be >= 1");
    const double x1 = n * lambda[0];
    const double x2 = n * lambda[1];
    const double x3 = n * lambda[2];
    int r2 = static_cast<int>(std::floor(x2));
    int r3 = static_cast<int>(std::floor(x3));
    double a2 = x2 - r2;
    double a3 = x3 - r3;
    if (r2 + r3 == n) {
        if (r2 >= r3) {
            --r2;
            a2 += 1.0;
        } else {
            --r3;
            a3 += 1.0;
        }
    }
    const int r1 = n - 1 - r2 - r3;
    // alpha_1 from the other two keeps the alpha sum at exactly 1 up to one rounding.
    double a1 = 1.0 - a2 - a3;
    if (std::abs(a1 - (x1 - r1)) > 1e-9)
        throw DomainError("offsets_of: inconsistent coordinates");
    return NodeOffset::make(n, {r1, r2, r3}, {a1, a2, a3});
}

double term_factor(int i, int r, double alpha) {
    if (i < 0) throw DomainError("term_factor: i must be >= 0");
    if (i == 0) return 1.0;
    const double x = r + alpha;
    const auto den = signed_gamma(x - i + 1.0);
    if (!den) return 0.0;
    const auto num = signed_gamma(x + 1.0);
    if (!num) throw DomainError("term_factor: Gamma(r + alpha + 1) has a pole");
    return std::exp(num->log_abs - den->log_abs - log_gamma(i + 1.0));
}

double PartitionSums::total() const {
    detail::CompensatedSum sum;
    for (double v : s) sum.add(v);
    return sum.value();
}

std::string_view region_name(Region r) {
    switch (r) {
        case Region::s1: return "S1";
        case Region::s2_1: return "S2,1";
        case Region::s2_2: return "S2,2";
        case Region::s2_3: return "S2,3";
        case Region::s3: return "S3";
        case Region::s4: return "S4";
        case Region::s5: return "S5";
        case Region::s6: return "S6";
    }
    return "?";
}

namespace {

// Index ranges in (i_2, i_3) or (i_2, i_1). S_3's inner variable is i_1 and S_5's
// inner bound is n - r_1 - 1 - i_2; with those two ranges the table covers I
// exactly once whenever r_1 >= r_3 - 1.
constexpr AffineBound k(int c) { return {c, 0, 0, 0, 0, 0}; }

constexpr std::array<RegionSpec, 8> kRegions = {{
    // S1: i2 in [0, r2], i3 in [0, r3]
    {Region::s1, false, k(0), {0, 0, 0, 1, 0, 0}, k(0), {0, 0, 0, 0, 1, 0}},
    // S2,1: i2 in [n - r1, n - r3], i1 in [n - r3 - i2, n - i2]
    {Region::s2_1, true, {0, 1, -1, 0, 0, 0}, {0, 1, 0, 0, -1, 0}, {0, 1, 0, 0, -1, -1}, {0, 1, 0, 0, 0, -1}},
    // S2,2: i2 in [n - r3 + 1, n], i1 in [0, n - i2]
    {Region::s2_2, true, {1, 1, 0, 0, -1, 0}, {0, 1, 0, 0, 0, 0}, k(0), {0, 1, 0, 0, 0, -1}},
    // S2,3: i2 in [r2 + 1, n - r1 - 1], i1 in [n - r3 - i2, r1]
    {Region::s2_3, true, {1, 0, 0, 1, 0, 0}, {-1, 1, -1, 0, 0, 0}, {0, 1, 0, 0, -1, -1}, {0, 0, 1, 0, 0, 0}},
    // S3: i2 in [0, r2], i1 in [0, r1]
    {Region::s3, true, k(0), {0, 0, 0, 1, 0, 0}, k(0), {0, 0, 1, 0, 0, 0}},
    // S4: i2 in [0, r2 - 1], i3 in [r3 + 1, n - r1 - 1 - i2]
    {Region::s4, false, k(0), {-1, 0, 0, 1, 0, 0}, {1, 0, 0, 0, 1, 0}, {-1, 1, -1, 0, 0, -1}},
    // S5: i2 in [r2 + 1, n - r1 - 1], i3 in [0, n - r1 - 1 - i2]
    {Region::s5, false, {1, 0, 0, 1, 0, 0}, {-1, 1, -1, 0, 0, 0}, k(0), {-1, 1, -1, 0, 0, -1}},
    // S6: i2 in [r2 + 1, n - r3 - 1], i1 in [0, n - r3 - 1 - i2]
    {Region::s6, true, {1, 0, 0, 1, 0, 0}, {-1, 1, 0, 0, -1, 0}, k(0), {-1, 1, 0, 0, -1, -1}},
}};

// Slot of a region in PartitionSums::s, and its S_2 part (or -1).
int sum_slot(Region r) {
    switch (r) {
        case Region::s1: return 0;
        case Region::s2_1:
        case Region::s2_2:
        case Region::s2_3: return 1;
        case Region::s3: return 2;
        case Region::s4: return 3;
        case Region::s5: return 4;
        case Region::s6: return 5;
    }
    return -1;
}

int s2_part(Region r) {
    switch (r) {
        case Region::s2_1: return 0;
        case Region::s2_2: return 1;
        case Region::s2_3: return 2;
        default: return -1;
    }
}

template <class F>
void for_each_index(const RegionSpec& spec, int n, const std::array<int, 3>& r, F&& f) {
    const int lo = spec.outer_lo.eval(n, r, 0);
    const int hi = spec.outer_hi.eval(n, r, 0);
    for (int i2 = std::max(lo, 0); i2 <= std::min(hi, n); ++i2) {
        const int ilo = spec.inner_lo.eval(n, r, i2);
        const int ihi = spec.inner_hi.eval(n, r, i2);
        for (int v = ilo; v <= ihi; ++v) {
            const int i1 = spec.inner_is_i1 ? v : n - i2 - v;
            const int i3 = spec.inner_is_i1 ? n - i1 - i2 : v;
            if (i1 < 0 || i3 < 0 || i1 > n || i3 > n) continue;
            f(i1, i2, i3);
        }
    }
}

}  // namespace

std::span<const RegionSpec> region_table() { return kRegions; }

std::vector<std::array<int, 3>> region_indices(const RegionSpec& spec, int n, const std::array<int, 3>& r) {
    std::vector<std::array<int, 3>> out;
    for_each_index(spec, n, r, [&](int i1, int i2, int i3) { out.push_back({i1, i2, i3}); });
    return out;
}

void validate_partition(int n, const std::array<int, 3>& r) {
    const int side = n + 1;
    std::vector<int> hits(static_cast<std::size_t>(side * side), 0);
    for (const auto& spec : kRegions)
        for_each_index(spec, n, r, [&](int i1, int i2, int) { ++hits[static_cast<std::size_t>(i1 * side + i2)]; });
    for (int i1 = 0; i1 <= n; ++i1)
        for (int i2 = 0; i1 + i2 <= n; ++i2) {
            const int h = hits[static_cast<std::size_t>(i1 * side + i2)];
            if (h != 1)
                throw PartitionError("S-regions for n=" + std::to_string(n) + " r=(" + std::to_string(r[0]) + "," +
                                     std::to_string(r[1]) + "," + std::to_string(r[2]) + ") cover i=(" +
                                     std::to_string(i1) + "," + std::to_string(i2) + "," +
                                     std::to_string(n - i1 - i2) + ") " + std::to_string(h) + " times");
        }
}

PartitionSums partition_sums(const NodeOffset& o) {
    if (o.n <= kPartitionCheckMaxDegree) validate_partition(o.n, o.r);
    const int n = o.n;
    // Per-coordinate factor tables a_{i_s}(lambda_s), i_s = 0..n.
    std::array<std::vector<double>, 3> a;
    for (int s = 0; s < 3; ++s) {
        a[s].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) a[s][i] = term_factor(i, o.r[s], o.alpha[s]);
    }
    PartitionSums out;
    for (const auto& spec : kRegions) {
        detail::CompensatedSum sum;
        for_each_index(spec, n, o.r, [&](int i1, int i2, int i3) { sum.add(a[0][i1] * a[1][i2] * a[2][i3]); });
        const int part = s2_part(spec.region);
        if (part >= 0)
            out.s2_parts[part] = sum.value();
        else
            out.s[sum_slot(spec.region)] = sum.value();
    }
    out.s[1] = out.s2_parts[0] + out.s2_parts[1] + out.s2_parts[2];
    return out;
}

double offset_lebesgue(const NodeOffset& o) { return partition_sums(o).total(); }

DeltaVector delta_vector(const NodeOffset& o) {
    const NodeOffset moved = o.shifted();
    const PartitionSums here = partition_sums(o);
    const PartitionSums there = partition_sums(moved);
    DeltaVector d;
    for (int k = 0; k < 6; ++k) d.delta[k] = here.s[k] - there.s[k];
    for (int k = 0; k < 3; ++k) d.delta2_parts[k] = here.s2_parts[k] - there.s2_parts[k];
    return d;
}

bool reduction_step_admissible(const NodeOffset& o) {
    const auto& [r1, r2, r3] = o.r;
    const auto& [a1, a2, a3] = o.alpha;
    return r1 >= 1 && a1 > -1.0 && a1 < 1.0 && a2 < 1.0 && a3 < 1.0 &&
           r1 - 1 + a1 >= r2 + a2 - kHypothesisSlack && r1 - 1 + a1 >= r3 + 1 + a3 - kHypothesisSlack;
}

bool localization_admissible(const NodeOffset& o) {
    const auto& [r1, r2, r3] = o.r;
    const auto& [a1, a2, a3] = o.alpha;
    return a1 > -1.0 && a1 < 1.0 && a2 < 1.0 && a3 < 1.0 && r1 + a1 >= r2 + a2 - kHypothesisSlack &&
           r1 + a1 >= r3 + a3 - kHypothesisSlack;
}

namespace {

ReductionCheck finish(double lhs, double base, double slack) {
    const double rhs = base + slack;
    return {lhs, rhs, slack, holds_within_tolerance(lhs, rhs)};
}

double branch_term(int r2, int r3, int n) {
    return r2 >= 1 ? std::ldexp(1.0, r3) : std::ldexp(1.0, r3 + 1) * std::log(n);
}

}  // namespace

ReductionCheck check_reduction_step(const NodeOffset& o) {
    if (!reduction_step_admissible(o))
        throw HypothesisError("check_reduction_step: hypotheses fail for " + describe(o));
    const auto& [r1, r2, r3] = o.r;
    const double slack = std::ldexp(1.0, r2 + r3 + 2) + std::ldexp(1.0, r2) / r1 - 1.0 + branch_term(r2, r3, o.n);
    return finish(offset_lebesgue(o.shifted()), offset_lebesgue(o), slack);
}

ReductionCheck check_lemma15(const NodeOffset& o) {
    if (!localization_admissible(o)) throw HypothesisError("check_lemma15: hypotheses fail for " + describe(o));
    const auto& [r1, r2, r3] = o.r;
    const NodeOffset target = NodeOffset::make(o.n, {r1 + r3, r2, 0}, o.alpha);
    const double slack = std::ldexp(1.0, r2 + r3 + 2) + std::ldexp(1.0, r2) - r3 + branch_term(r2, r3, o.n);
    return finish(offset_lebesgue(o), offset_lebesgue(target), slack);
}

ReductionCheck check_lemma16(const NodeOffset& o) {
    if (o.r[2] != 0 || !localization_admissible(o))
        throw HypothesisError("check_lemma16: hypotheses fail (need r_3 = 0) for " + describe(o));
    const auto& [r1, r2, r3] = o.r;
    const NodeOffset target = NodeOffset::make(o.n, {r1 + r2, 0, 0}, o.alpha);
    const double slack = std::ldexp(1.0, r2 + 2) + 1.0 - r2 + std::ldexp(1.0, r2 + 1) * std::log(o.n);
    return finish(offset_lebesgue(o), offset_lebesgue(target), slack);
}

ReductionCheck check_theorem1(const NodeOffset& o) {
    if (!localization_admissible(o)) throw HypothesisError("check_theorem1: hypotheses fail for " + describe(o));
    const int n = o.n;
    const NodeOffset target = NodeOffset::make(n, {n - 1, 0, 0}, o.alpha);
    const double slack = std::exp2(2.0 * n / 3.0) * (10.0 + 2.0 * std::log(n));
    return finish(offset_lebesgue(o), offset_lebesgue(target), slack);
}

std::vector<ReductionCheck> reduction_chain(const NodeOffset& o) {
    if (!localization_admissible(o)) throw HypothesisError("reduction_chain: hypotheses fail for " + describe(o));
    const auto& [r1, r2, r3] = o.r;
    std::vector<ReductionCheck> steps;
    for (int j = 0; j < r3; ++j)
        steps.push_back(check_reduction_step(NodeOffset::make(o.n, {r1 + j + 1, r2, r3 - j - 1}, o.alpha)));
    return steps;
}

}  // namespace lebx
