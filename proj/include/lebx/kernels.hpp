#pragma once

#include <span>

#include "lebx/simplex.hpp"

namespace lebx {

/// Lebesgue function at a batch of points stored row-major, d+1 coordinates per
/// point. Points are not validated. out.size() must equal the number of points.
///
/// Each point is evaluated independently with a fixed summation order, so the
/// parallel kernel is bit-identical to the serial one for any thread count.
void lebesgue_batch(std::span<const double> coords, int d, int n, std::span<double> out,
                    EvalPath path = EvalPath::automatic);

/// Serial reference for lebesgue_batch.
void lebesgue_batch_serial(std::span<const double> coords, int d, int n, std::span<double> out,
                           EvalPath path = EvalPath::automatic);

}  // namespace lebx
