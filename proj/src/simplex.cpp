#include "lebx/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lebx/detail/compensated_sum.hpp"
#include "lebx/detail/lebesgue_eval.hpp"
#include "lebx/errors.hpp"
#include "lebx/specfun.hpp"

namespace lebx {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw DomainError("MultiIndex: need at least two entries (d >= 1)");
    for (int e : entries_) {
        if (e < 0) throw DomainError("MultiIndex: entries must be nonnegative");
        degree_ += e;
    }
}

Barycentric::Barycentric(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw BarycentricError("Barycentric: need at least two coordinates (d >= 1)");
    double sum = 0.0;
    for (double& c : coords_) {
        if (!std::isfinite(c)) throw BarycentricError("Barycentric: non-finite coordinate");
        if (c < -kNegativeTolerance) throw BarycentricError("Barycentric: negative coordinate " + std::to_string(c));
        if (c < 0.0) c = 0.0;
        sum += c;
    }
    if (std::abs(sum - 1.0) > kRenormalizeTolerance)
        throw BarycentricError("Barycentric: coordinates sum to " + std::to_string(sum) + ", expected 1");
    if (sum != 1.0)
        for (double& c : coords_) c /= sum;
    for (double c : coords_)
        if (c > 1.0) throw BarycentricError("Barycentric: coordinate exceeds 1");
}

Barycentric Barycentric::centroid(int d) {
    if (d < 1) throw DomainError("centroid: d must be >= 1");
    return Barycentric(std::vector<double>(static_cast<std::size_t>(d) + 1, 1.0 / (d + 1)));
}

double node_count(int n, int d) {
    if (n < 0 || d < 1) throw DomainError("node_count: need n >= 0 and d >= 1");
    double c = 1.0;
    for (int k = 1; k <= d; ++k) c = c * (n + k) / k;
    return std::round(c);
}

namespace {

void enumerate_rec(int s, int remaining, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    const int last = static_cast<int>(cur.size()) - 1;
    if (s == last) {
        cur[s] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int i = remaining; i >= 0; --i) {
        cur[s] = i;
        enumerate_rec(s + 1, remaining - i, cur, out);
    }
}

}  // namespace

NodeSet enumerate_multi_indices(int n, int d, std::size_t cap) {
    const double count = node_count(n, d);
    if (count > static_cast<double>(cap))
        throw ResourceError("enumerate_multi_indices: C(n+d, d) = " + std::to_string(count) + " exceeds cap " +
                            std::to_string(cap));
    NodeSet set{n, d, {}};
    set.indices.reserve(static_cast<std::size_t>(count));
    std::vector<int> cur(static_cast<std::size_t>(d) + 1, 0);
    enumerate_rec(0, n, cur, set.indices);
    return set;
}

Barycentric node_of(const MultiIndex& i) {
    const int n = i.degree();
    if (n == 0) throw DomainError("node_of: degree 0 has no equispaced node");
    std::vector<double> c;
    c.reserve(i.entries().size());
    for (int e : i.entries()) c.push_back(static_cast<double>(e) / n);
    return Barycentric(std::move(c));
}

namespace {

bool use_direct(EvalPath path, int n) {
    return path == EvalPath::direct || (path == EvalPath::automatic && n <= kDirectMaxDegree);
}

void check_dims(const MultiIndex& i, const Barycentric& lambda) {
    if (i.entries().size() != lambda.size())
        throw DomainError("fundamental_poly: index and point dimensions differ");
}

}  // namespace

double fundamental_poly(const MultiIndex& i, const Barycentric& lambda, EvalPath path) {
    check_dims(i, lambda);
    const int n = i.degree();
    if (use_direct(path, n)) {
        double p = 1.0;
        for (std::size_t s = 0; s < lambda.size(); ++s) {
            const double x = n * lambda[s];
            for (int t = 0; t < i[s]; ++t) p *= (x - t) / (t + 1);
        }
        return p;
    }
    SignedLog p = SignedLog::one();
    for (std::size_t s = 0; s < lambda.size(); ++s) {
        const double x = n * lambda[s];
        for (int t = 0; t < i[s]; ++t) p = p * SignedLog::from_double((x - t) / (t + 1));
    }
    return p.to_double();
}

double fundamental_poly_gamma(const MultiIndex& i, const Barycentric& lambda) {
    check_dims(i, lambda);
    const int n = i.degree();
    SignedLog p = SignedLog::one();
    for (std::size_t s = 0; s < lambda.size(); ++s) {
        if (i[s] == 0) continue;
        const double x = n * lambda[s];
        const auto num = signed_gamma(x + 1.0);
        const auto den = signed_gamma(x - i[s] + 1.0);
        if (!den) return 0.0;
        // x >= 0, so the numerator is never a pole.
        p = p * (*num / *den) / SignedLog{1, log_gamma(i[s] + 1.0)};
    }
    return p.to_double();
}

namespace detail {

namespace {

// |prod_{t<k} (x - t)/(t+1)| for k = 0..n, written to out[0..n].
void fill_factors_direct(double x, int n, double* out) {
    double p = 1.0;
    out[0] = 1.0;
    for (int t = 0; t < n; ++t) {
        p *= (x - t) / (t + 1);
        out[t + 1] = std::abs(p);
    }
}

// ln of the same; -inf once a factor vanishes.
void fill_factors_log(double x, int n, double* out) {
    double acc = 0.0;
    out[0] = 0.0;
    for (int t = 0; t < n; ++t) {
        const double f = x - t;
        acc = (f == 0.0 || std::isinf(acc)) ? -std::numeric_limits<double>::infinity()
                                            : acc + std::log(std::abs(f)) - std::log(t + 1.0);
        out[t + 1] = acc;
    }
}

struct DirectSum {
    const double* table;
    int stride;
    int last;
    CompensatedSum sum;

    const double* row(int s) const { return table + static_cast<std::ptrdiff_t>(s) * stride; }

    void run(int s, int remaining, double partial) {
        if (s == last - 1) {
            const double* a = row(s);
            const double* b = row(last);
            for (int i = remaining; i >= 0; --i) sum.add(partial * a[i] * b[remaining - i]);
            return;
        }
        const double* a = row(s);
        for (int i = remaining; i >= 0; --i) {
            const double p = partial * a[i];
            if (p == 0.0) continue;  // every term below is an exact zero
            run(s + 1, remaining - i, p);
        }
    }
};

struct LogSum {
    const double* table;
    int stride;
    int last;
    double shift;
    double max_log = -std::numeric_limits<double>::infinity();
    CompensatedSum sum;

    const double* row(int s) const { return table + static_cast<std::ptrdiff_t>(s) * stride; }

    template <bool Accumulate>
    void run(int s, int remaining, double partial) {
        const double* a = row(s);
        if (s == last) {
            const double v = partial + a[remaining];
            if constexpr (Accumulate) {
                if (v != -std::numeric_limits<double>::infinity()) sum.add(std::exp(v - shift));
            } else {
                max_log = std::max(max_log, v);
            }
            return;
        }
        for (int i = remaining; i >= 0; --i) {
            const double p = partial + a[i];
            if (p == -std::numeric_limits<double>::infinity()) continue;
            run<Accumulate>(s + 1, remaining - i, p);
        }
    }
};

}  // namespace

double lebesgue_eval(std::span<const double> coords, int n, EvalPath path, LebesgueWorkspace& ws) {
    const int last = static_cast<int>(coords.size()) - 1;
    const int stride = n + 1;
    ws.table.resize(coords.size() * static_cast<std::size_t>(stride));
    double* table = ws.table.data();
    if (use_direct(path, n)) {
        for (int s = 0; s <= last; ++s) fill_factors_direct(n * coords[s], n, table + s * stride);
        DirectSum acc{table, stride, last, {}};
        acc.run(0, n, 1.0);
        return acc.sum.value();
    }
    for (int s = 0; s <= last; ++s) fill_factors_log(n * coords[s], n, table + s * stride);
    LogSum acc{table, stride, last, 0.0, -std::numeric_limits<double>::infinity(), {}};
    acc.run<false>(0, n, 0.0);
    acc.shift = acc.max_log;
    acc.run<true>(0, n, 0.0);
    return std::exp(acc.shift) * acc.sum.value();
}

}  // namespace detail

double lebesgue_function_raw(std::span<const double> coords, int n, EvalPath path) {
    detail::LebesgueWorkspace ws;
    return detail::lebesgue_eval(coords, n, path, ws);
}

double lebesgue_function(const Barycentric& lambda, int n, EvalPath path) {
    if (n < 0) throw DomainError("lebesgue_function: n must be >= 0");
    return lebesgue_function_raw(lambda.coords(), n, path);
}

std::vector<double> lebesgue_terms(const Barycentric& lambda, int n) {
    const NodeSet nodes = enumerate_multi_indices(n, lambda.dimension());
    std::vector<double> terms;
    terms.reserve(nodes.size());
    for (const auto& i : nodes.indices) terms.push_back(std::abs(fundamental_poly(i, lambda)));
    return terms;
}

double interpolate(const std::map<MultiIndex, double>& values, const Barycentric& lambda, int n) {
    const NodeSet nodes = enumerate_multi_indices(n, lambda.dimension());
    detail::CompensatedSum sum;
    for (const auto& i : nodes.indices) {
        const auto it = values.find(i);
        if (it == values.end()) {
            std::string label;
            for (int e : i.entries()) label += (label.empty() ? "" : ",") + std::to_string(e);
            throw MissingNodeError("interpolate: no value for node (" + label + ")");
        }
        sum.add(it->second * fundamental_poly(i, lambda));
    }
    return sum.value();
}

double interpolate(std::span<const double> values, const NodeSet& nodes, const Barycentric& lambda) {
    if (values.size() != nodes.size())
        throw MissingNodeError("interpolate: expected " + std::to_string(nodes.size()) + " values, got " +
                               std::to_string(values.size()));
    if (lambda.dimension() != nodes.d) throw DomainError("interpolate: point and node set dimensions differ");
    detail::CompensatedSum sum;
    for (std::size_t k = 0; k < nodes.size(); ++k) sum.add(values[k] * fundamental_poly(nodes.indices[k], lambda));
    return sum.value();
}

}  // namespace lebx
