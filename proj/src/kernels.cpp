#include "lebx/kernels.hpp"

#include <cstddef>
#include <string>

#include "lebx/detail/lebesgue_eval.hpp"
#include "lebx/errors.hpp"

namespace lebx {

namespace {

std::ptrdiff_t point_count(std::span<const double> coords, int d, std::span<double> out) {
    if (d < 1) throw DomainError("lebesgue_batch: d must be >= 1");
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    if (coords.size() % stride != 0 || coords.size() / stride != out.size())
        throw DomainError("lebesgue_batch: coordinate buffer holds " + std::to_string(coords.size()) +
                          " values, expected " + std::to_string(out.size() * stride));
    return static_cast<std::ptrdiff_t>(out.size());
}

}  // namespace

void lebesgue_batch(std::span<const double> coords, int d, int n, std::span<double> out, EvalPath path) {
    const std::ptrdiff_t count = point_count(coords, d, out);
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
#pragma omp parallel
    {
        detail::LebesgueWorkspace ws;
#pragma omp for schedule(static)
        for (std::ptrdiff_t p = 0; p < count; ++p)
            out[p] = detail::lebesgue_eval(coords.subspan(p * stride, stride), n, path, ws);
    }
}

void lebesgue_batch_serial(std::span<const double> coords, int d, int n, std::span<double> out, EvalPath path) {
    const std::ptrdiff_t count = point_count(coords, d, out);
    const std::size_t stride = static_cast<std::size_t>(d) + 1;
    detail::LebesgueWorkspace ws;
    for (std::ptrdiff_t p = 0; p < count; ++p)
        out[p] = detail::lebesgue_eval(coords.subspan(p * stride, stride), n, path, ws);
}

}  // namespace lebx
