#pragma once

#include <span>
#include <vector>

#include "lebx/simplex.hpp"

namespace lebx::detail {

// Scratch tables reused across evaluations by one thread.
struct LebesgueWorkspace {
    std::vector<double> table;
};

// Core evaluator behind lebesgue_function and the batch kernels.
double lebesgue_eval(std::span<const double> coords, int n, EvalPath path, LebesgueWorkspace& ws);

}  // namespace lebx::detail
