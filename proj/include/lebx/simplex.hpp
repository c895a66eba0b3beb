#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace lebx {

/// Tuple i = (i_1, ..., i_{d+1}) of nonnegative integers summing to the degree n.
class MultiIndex {
public:
    /// Throws DomainError if an entry is negative or fewer than two entries are given.
    explicit MultiIndex(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int operator[](std::size_t s) const { return entries_[s]; }
    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(entries_.size()) - 1; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<int> entries_;
    int degree_ = 0;
};

/// Barycentric coordinates of a point of the simplex.
///
/// Construction renormalizes when the coordinate sum is within
/// kRenormalizeTolerance of 1 and throws BarycentricError otherwise; a
/// coordinate below -kNegativeTolerance is also rejected (tiny negatives are
/// clamped to zero).
class Barycentric {
public:
    static constexpr double kRenormalizeTolerance = 1e-9;
    static constexpr double kNegativeTolerance = 1e-12;

    explicit Barycentric(std::vector<double> coords);

    static Barycentric centroid(int d);

    std::span<const double> coords() const { return coords_; }
    double operator[](std::size_t s) const { return coords_[s]; }
    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    std::size_t size() const { return coords_.size(); }

    friend bool operator==(const Barycentric&, const Barycentric&) = default;

private:
    std::vector<double> coords_;
};

/// Equispaced node set of degree n in dimension d, in graded lexicographic order
/// (i_1 descending, then i_2 descending, ...).
struct NodeSet {
    int n = 0;
    int d = 0;
    std::vector<MultiIndex> indices;

    std::size_t size() const { return indices.size(); }
};

inline constexpr std::size_t kDefaultNodeCap = 2'000'000;

/// C(n+d, d) as a double (exact while below 2^53).
double node_count(int n, int d);

/// Throws ResourceError when C(n+d, d) exceeds cap.
NodeSet enumerate_multi_indices(int n, int d, std::size_t cap = kDefaultNodeCap);

/// a_i = i / n.
Barycentric node_of(const MultiIndex& i);

/// Which arithmetic evaluates products of up to n factors.
enum class EvalPath {
    automatic,  // direct for n <= kDirectMaxDegree, log domain above
    direct,
    log_domain,
};

inline constexpr int kDirectMaxDegree = 40;

/// l_i(lambda) via the per-coordinate product prod_s prod_{t<i_s} (n lambda_s - t)/(t+1).
double fundamental_poly(const MultiIndex& i, const Barycentric& lambda, EvalPath path = EvalPath::automatic);

/// l_i(lambda) via the gamma-ratio form prod_s Gamma(n lambda_s + 1) / (i_s! Gamma(n lambda_s - i_s + 1)),
/// with a denominator pole giving 0. Independent of fundamental_poly's arithmetic.
double fundamental_poly_gamma(const MultiIndex& i, const Barycentric& lambda);

/// Lebesgue function sum_i |l_i(lambda)| at degree n; the dimension is taken from lambda.
double lebesgue_function(const Barycentric& lambda, int n, EvalPath path = EvalPath::automatic);

/// Lebesgue function evaluated on raw coordinates; no validation.
/// coords.size() == d + 1 and the coordinates must form a valid barycentric point.
double lebesgue_function_raw(std::span<const double> coords, int n, EvalPath path = EvalPath::automatic);

/// Per-index terms |l_i(lambda)| in NodeSet order.
std::vector<double> lebesgue_terms(const Barycentric& lambda, int n);

/// sum_i f(a_i) l_i(lambda). Throws MissingNodeError if an index of the node set has no value.
double interpolate(const std::map<MultiIndex, double>& values, const Barycentric& lambda, int n);

/// Same, with values given in NodeSet order.
double interpolate(std::span<const double> values, const NodeSet& nodes, const Barycentric& lambda);

}  // namespace lebx
