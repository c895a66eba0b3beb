#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "lebx/simplex.hpp"

namespace lebx {

/// Integer/fractional split n*lambda_s = r_s + alpha_s of a point of the
/// triangle, with r_1 + r_2 + r_3 = n - 1, alpha_1 in [-1, 1],
/// alpha_2, alpha_3 in [0, 1] and alpha_1 + alpha_2 + alpha_3 = 1.
struct NodeOffset {
    static constexpr double kAlphaSumTolerance = 1e-12;

    int n = 0;
    std::array<int, 3> r{};
    std::array<double, 3> alpha{};

    /// Validating constructor; throws DomainError on any broken invariant.
    static NodeOffset make(int n, std::array<int, 3> r, std::array<double, 3> alpha);

    Barycentric point() const;

    /// (r_1 - 1, r_2, r_3 + 1) with alpha unchanged. Throws DomainError if r_1 == 0
    /// or the shifted offset is not a point of the triangle.
    NodeOffset shifted() const;
};

/// Offsets of a point of the triangle: r_2 = floor(n lambda_2), r_3 = floor(n lambda_3),
/// r_1 = n - 1 - r_2 - r_3, alpha_1 = n lambda_1 - r_1. When that leaves r_1 = -1
/// (lambda_1 = 0 with n lambda_2, n lambda_3 integral) the larger of r_2, r_3 is
/// lowered by one and its alpha set to 1. Throws DomainError unless d == 2.
NodeOffset offsets_of(const Barycentric& lambda, int n);

/// Gamma(r + alpha + 1) / (i! |Gamma(r + alpha - i + 1)|); 0 when the denominator
/// argument is a pole.
double term_factor(int i, int r, double alpha);

/// The sums S_1..S_6 of |l_i| over the six index regions, with S_2 split in three.
struct PartitionSums {
    std::array<double, 6> s{};         // S_1..S_6 at s[0]..s[5]
    std::array<double, 3> s2_parts{};  // S_{2,1}, S_{2,2}, S_{2,3}

    double operator[](int k) const { return s[static_cast<std::size_t>(k - 1)]; }
    double total() const;
};

/// Identifies one summation region of the Lebesgue function.
enum class Region { s1, s2_1, s2_2, s2_3, s3, s4, s5, s6 };

std::string_view region_name(Region r);

/// Bound of the form c + c_n n + c_r1 r_1 + c_r2 r_2 + c_r3 r_3 + c_i2 i_2.
struct AffineBound {
    int c = 0, c_n = 0, c_r1 = 0, c_r2 = 0, c_r3 = 0, c_i2 = 0;
    int eval(int n, const std::array<int, 3>& r, int i2) const {
        return c + c_n * n + c_r1 * r[0] + c_r2 * r[1] + c_r3 * r[2] + c_i2 * i2;
    }
};

/// Double sum over i_2 in [outer_lo, outer_hi] and, for each i_2, the inner
/// variable (i_1 or i_3) in [inner_lo, inner_hi]; the remaining index is fixed
/// by i_1 + i_2 + i_3 = n.
struct RegionSpec {
    Region region;
    bool inner_is_i1;
    AffineBound outer_lo, outer_hi, inner_lo, inner_hi;
};

/// The region table behind partition_sums.
std::span<const RegionSpec> region_table();

/// Every index of the regions for (n, r), in table order. Indices with a
/// negative or out-of-range component are dropped.
std::vector<std::array<int, 3>> region_indices(const RegionSpec& spec, int n, const std::array<int, 3>& r);

/// Throws PartitionError unless every i in I is covered by exactly one region.
void validate_partition(int n, const std::array<int, 3>& r);

/// Partition checks run per call up to this degree.
inline constexpr int kPartitionCheckMaxDegree = 30;

/// S_1..S_6 at an offset, each term computed as prod_s term_factor(i_s, r_s, alpha_s).
PartitionSums partition_sums(const NodeOffset& o);

/// sum_k S_k, the Lebesgue function written in offset coordinates.
double offset_lebesgue(const NodeOffset& o);

/// delta_k = S_k(o) - S_k(o.shifted()).
struct DeltaVector {
    std::array<double, 6> delta{};
    std::array<double, 3> delta2_parts{};

    double operator[](int k) const { return delta[static_cast<std::size_t>(k - 1)]; }
};

DeltaVector delta_vector(const NodeOffset& o);

/// Outcome of one reduction inequality lhs <= rhs = base + slack.
struct ReductionCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

inline constexpr double kReductionAbsTolerance = 1e-9;
inline constexpr double kReductionRelTolerance = 1e-12;

/// Single shift (r_1, r_2, r_3) -> (r_1 - 1, r_2, r_3 + 1): the shifted value is at
/// most the original plus 2^{r2+r3+2} + 2^{r2}/r1 - 1 + (2^{r3} if r2 >= 1, else
/// 2^{r3+1} ln n). Requires r_1 - 1 + alpha_1 >= r_2 + alpha_2,
/// r_1 - 1 + alpha_1 >= r_3 + 1 + alpha_3, -1 < alpha_1 < 1, alpha_2, alpha_3 < 1.
ReductionCheck check_reduction_step(const NodeOffset& o);

/// Collapse of r_3 onto r_1: value at (r_1 + r_3, r_2, 0) plus
/// 2^{r2+r3+2} + 2^{r2} - r3 + (2^{r3} if r2 >= 1, else 2^{r3+1} ln n).
ReductionCheck check_lemma15(const NodeOffset& o);

/// With r_3 = 0, collapse of r_2 onto r_1: value at (r_1 + r_2, 0, 0) plus
/// 2^{r2+2} + 1 - r2 + 2^{r2+1} ln n.
ReductionCheck check_lemma16(const NodeOffset& o);

/// Localization: value at (n - 1, 0, 0) plus 2^{2n/3} (10 + 2 ln n).
ReductionCheck check_theorem1(const NodeOffset& o);

/// The r_3 single shifts that carry o to (r_1 + r_3, r_2, 0), in order.
std::vector<ReductionCheck> reduction_chain(const NodeOffset& o);

/// Hypotheses of check_reduction_step.
bool reduction_step_admissible(const NodeOffset& o);
/// Hypotheses of check_lemma15 and check_theorem1.
bool localization_admissible(const NodeOffset& o);

}  // namespace lebx
