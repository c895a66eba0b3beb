#pragma once

#include <cstdint>
#include <string_view>

#include "lebx/simplex.hpp"

namespace lebx {

enum class SearchMode {
    full_domain,    // the whole simplex (or its fundamental domain)
    vertex_region,  // lambda_s <= 2/n for s >= 2: the corner at the first vertex
    edge_only,      // lambda_s = 0 for s >= 3: the edge between the first two vertices
};

std::string_view mode_name(SearchMode m);
/// Accepts "full", "full-domain", "vertex", "vertex-region", "edge", "edge-only";
/// throws DomainError otherwise.
SearchMode parse_mode(std::string_view s);

struct MaxConfig {
    double grid_step = 0.0;  // <= 0 selects 1/(4n)
    int refine_rounds = 30;
    int top_cells = 16;
    SearchMode mode = SearchMode::full_domain;
    /// Search lambda_1 >= lambda_2 >= ... only. The Lebesgue function is invariant
    /// under coordinate permutations, so this loses nothing.
    bool use_symmetry = true;
    std::int64_t max_evaluations = 50'000'000;
};

struct MaximizationResult {
    double lambda_est = 0.0;  // lebesgue_function(argmax), re-evaluated
    Barycentric argmax = Barycentric::centroid(1);
    std::int64_t evaluations = 0;
    double converged_step = 0.0;  // lattice spacing of the last round
};

/// Grid search plus top-cell refinement. The coarse lattice has spacing 1/N with
/// N = ceil(1/grid_step); each round halves the spacing and evaluates the lattice
/// neighbours of the top_cells best distinct points. For d >= 2 in full-domain mode
/// the result for d - 1, placed on the face lambda_{d+1} = 0, competes as a
/// candidate, so the estimate never falls below the lower-dimensional one.
///
/// The argmax is reported in the fundamental domain. Results are bit-identical
/// for any thread count. Throws DomainError for n < 1, d < 1 or an invalid config
/// and ResourceError once more than max_evaluations points would be evaluated.
MaximizationResult maximize_lebesgue(int n, int d, const MaxConfig& cfg = {});

/// The one-dimensional constant, maximize_lebesgue(n, 1, cfg).
MaximizationResult maximize_on_edge(int n, const MaxConfig& cfg = {});

}  // namespace lebx
