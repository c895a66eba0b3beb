#include "lebx/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "lebx/errors.hpp"
#include "lebx/kernels.hpp"

namespace lebx {

std::string_view mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::full_domain: return "full-domain";
        case SearchMode::vertex_region: return "vertex-region";
        case SearchMode::edge_only: return "edge-only";
    }
    return "?";
}

SearchMode parse_mode(std::string_view s) {
    if (s == "full" || s == "full-domain") return SearchMode::full_domain;
    if (s == "vertex" || s == "vertex-region") return SearchMode::vertex_region;
    if (s == "edge" || s == "edge-only") return SearchMode::edge_only;
    throw DomainError("unknown search mode '" + std::string(s) + "'");
}

namespace {

// Lattice point k with sum_s k_s = N; the barycentric point is k / N.
using Point = std::vector<std::int64_t>;

struct Scored {
    Point k;
    double value;
};

constexpr std::int64_t kMaxLattice = std::int64_t{1} << 52;
constexpr double kTieTolerance = 1e-12;

// value descending, then lexicographically smallest point.
bool better(const Scored& a, const Scored& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.k < b.k;
}

class Search {
public:
    Search(int n, int d, const MaxConfig& cfg, std::int64_t used)
        : n_(n), d_(d), cfg_(cfg), evaluations_(used) {}

    std::int64_t evaluations() const { return evaluations_; }

    bool in_domain(const Point& k, std::int64_t N) const {
        for (std::size_t s = 0; s < k.size(); ++s) {
            if (k[s] < 0) return false;
            if (cfg_.use_symmetry && s > 0 && k[s] > k[s - 1]) return false;
            if (s >= 1 && cfg_.mode == SearchMode::vertex_region && k[s] * n_ > 2 * N) return false;
            if (s >= 2 && cfg_.mode == SearchMode::edge_only && k[s] != 0) return false;
        }
        return true;
    }

    std::vector<Scored> evaluate(std::vector<Point> pts, std::int64_t N) {
        const auto count = static_cast<std::int64_t>(pts.size());
        if (evaluations_ + count > cfg_.max_evaluations)
            throw ResourceError("maximize_lebesgue: evaluation budget of " + std::to_string(cfg_.max_evaluations) +
                                " exceeded");
        evaluations_ += count;
        const std::size_t stride = static_cast<std::size_t>(d_) + 1;
        std::vector<double> coords(pts.size() * stride);
        for (std::size_t p = 0; p < pts.size(); ++p)
            for (std::size_t s = 0; s < stride; ++s)
                coords[p * stride + s] = static_cast<double>(pts[p][s]) / static_cast<double>(N);
        std::vector<double> values(pts.size());
        lebesgue_batch(coords, d_, n_, values);
        std::vector<Scored> out;
        out.reserve(pts.size());
        for (std::size_t p = 0; p < pts.size(); ++p) out.push_back({std::move(pts[p]), values[p]});
        return out;
    }

    std::vector<Point> coarse_lattice(std::int64_t N) const {
        std::vector<Point> pts;
        Point cur(static_cast<std::size_t>(d_) + 1, 0);
        enumerate(0, N, N, cur, pts);
        return pts;
    }

    // Best distinct points; a point within one lattice step of a chosen one (after
    // sorting coordinates when the search is not symmetric) is skipped.
    std::vector<Scored> select_top(std::vector<Scored> all) const {
        std::sort(all.begin(), all.end(), better);
        std::vector<Scored> top;
        std::vector<Point> keys;
        for (auto& c : all) {
            if (static_cast<int>(top.size()) == cfg_.top_cells) break;
            const Point key = representative(c.k);
            const bool near = std::any_of(keys.begin(), keys.end(), [&](const Point& q) {
                for (std::size_t s = 0; s < q.size(); ++s)
                    if (std::abs(q[s] - key[s]) > 1) return false;
                return true;
            });
            if (near) continue;
            keys.push_back(key);
            top.push_back(std::move(c));
        }
        return top;
    }

    // Halves the spacing: every top point is kept at 2k and its neighbours 2k + delta,
    // delta in {-1, 0, 1}^{d+1} with zero sum, are evaluated.
    std::vector<Scored> refine(const std::vector<Scored>& top, std::int64_t N) {
        std::set<Point> kept;
        std::vector<Scored> all;
        for (const auto& c : top) {
            Point k2 = c.k;
            for (auto& v : k2) v *= 2;
            kept.insert(k2);
            all.push_back({std::move(k2), c.value});
        }
        std::set<Point> fresh;
        const auto deltas = zero_sum_deltas();
        for (const auto& c : all)
            for (const auto& delta : deltas) {
                Point q = c.k;
                for (std::size_t s = 0; s < q.size(); ++s) q[s] += delta[s];
                if (!kept.contains(q) && in_domain(q, N)) fresh.insert(std::move(q));
            }
        auto scored = evaluate(std::vector<Point>(fresh.begin(), fresh.end()), N);
        all.insert(all.end(), std::make_move_iterator(scored.begin()), std::make_move_iterator(scored.end()));
        return all;
    }

private:
    void enumerate(std::size_t s, std::int64_t remaining, std::int64_t N, Point& cur, std::vector<Point>& out) const {
        if (s == cur.size() - 1) {
            cur[s] = remaining;
            if (in_domain(cur, N)) out.push_back(cur);
            return;
        }
        std::int64_t hi = remaining;
        if (cfg_.use_symmetry && s > 0) hi = std::min(hi, cur[s - 1]);
        for (std::int64_t v = hi; v >= 0; --v) {
            cur[s] = v;
            enumerate(s + 1, remaining - v, N, cur, out);
        }
    }

    Point representative(const Point& k) const {
        if (cfg_.use_symmetry) return k;
        Point r = k;
        std::sort(r.begin(), r.end(), std::greater<>());
        return r;
    }

    std::vector<Point> zero_sum_deltas() const {
        std::vector<Point> out;
        const std::size_t m = static_cast<std::size_t>(d_) + 1;
        Point cur(m, -1);
        while (true) {
            std::int64_t sum = 0;
            bool zero = true;
            for (auto v : cur) {
                sum += v;
                zero = zero && v == 0;
            }
            if (sum == 0 && !zero) out.push_back(cur);
            std::size_t s = 0;
            while (s < m && cur[s] == 1) cur[s++] = -1;
            if (s == m) break;
            ++cur[s];
        }
        return out;
    }

    int n_;
    int d_;
    MaxConfig cfg_;
    std::int64_t evaluations_;
};

void validate(int n, int d, const MaxConfig& cfg) {
    if (n < 1) throw DomainError("maximize_lebesgue: need n >= 1");
    if (d < 1) throw DomainError("maximize_lebesgue: need d >= 1");
    if (cfg.grid_step > 0.5) throw DomainError("maximize_lebesgue: grid_step must lie in (0, 0.5]");
    if (cfg.refine_rounds < 0) throw DomainError("maximize_lebesgue: refine_rounds must be >= 0");
    if (cfg.top_cells < 1) throw DomainError("maximize_lebesgue: top_cells must be >= 1");
    if (cfg.max_evaluations < 1) throw DomainError("maximize_lebesgue: max_evaluations must be >= 1");
}

std::vector<double> to_coords(const Point& k, std::int64_t N) {
    std::vector<double> c;
    c.reserve(k.size());
    for (auto v : k) c.push_back(static_cast<double>(v) / static_cast<double>(N));
    return c;
}

MaximizationResult run(int n, int d, const MaxConfig& cfg, std::int64_t used) {
    validate(n, d, cfg);
    if (n == 1) {
        const Barycentric c = Barycentric::centroid(d);
        return {lebesgue_function(c, n), c, used + 1, cfg.grid_step > 0.0 ? cfg.grid_step : 0.25};
    }

    std::vector<double> face_coords;
    double face_value = 0.0;
    if (d >= 2 && cfg.mode == SearchMode::full_domain) {
        const MaximizationResult face = run(n, d - 1, cfg, used);
        used = face.evaluations;
        face_coords.assign(face.argmax.coords().begin(), face.argmax.coords().end());
        face_coords.push_back(0.0);
    }

    Search search(n, d, cfg, used);
    const double step = cfg.grid_step > 0.0 ? cfg.grid_step : 1.0 / (4.0 * n);
    std::int64_t N = static_cast<std::int64_t>(std::ceil(1.0 / step - 1e-9));
    auto scored = search.evaluate(search.coarse_lattice(N), N);
    for (int round = 0; round < cfg.refine_rounds && 2 * N <= kMaxLattice; ++round) {
        auto top = search.select_top(std::move(scored));
        N *= 2;
        scored = search.refine(top, N);
    }
    std::sort(scored.begin(), scored.end(), better);
    // Among values within the tie tolerance of the best, the smallest point wins.
    const double cutoff = scored.front().value - kTieTolerance * std::max(1.0, std::abs(scored.front().value));
    const Scored* best = &scored.front();
    for (const auto& c : scored) {
        if (c.value < cutoff) break;
        if (c.k < best->k) best = &c;
    }
    std::vector<double> coords = to_coords(best->k, N);
    double value = best->value;
    std::int64_t evaluations = search.evaluations();

    if (!face_coords.empty()) {
        ++evaluations;
        if (evaluations > cfg.max_evaluations)
            throw ResourceError("maximize_lebesgue: evaluation budget of " + std::to_string(cfg.max_evaluations) +
                                " exceeded");
        face_value = lebesgue_function_raw(face_coords, n);
        const double tie = kTieTolerance * std::max(1.0, std::abs(value));
        if (face_value > value + tie || (face_value >= value - tie && face_coords < coords)) {
            coords = face_coords;
            value = face_value;
        }
    }

    std::sort(coords.begin(), coords.end(), std::greater<>());
    Barycentric argmax(std::move(coords));
    return {lebesgue_function(argmax, n), std::move(argmax), evaluations, 1.0 / static_cast<double>(N)};
}

}  // namespace

MaximizationResult maximize_lebesgue(int n, int d, const MaxConfig& cfg) { return run(n, d, cfg, 0); }

MaximizationResult maximize_on_edge(int n, const MaxConfig& cfg) { return maximize_lebesgue(n, 1, cfg); }

}  // namespace lebx
