#include "planecomp/grid_eval.hpp"

namespace planecomp::kernels {

void grid_eval_scalar(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                      std::size_t m, std::uint32_t p) {
    for (std::size_t j = 0; j < m; ++j) {
        std::uint64_t x = points[j], acc = 0;
        for (std::size_t i = n; i-- > 0;) acc = (acc * x + coeffs[i]) % p;
        out[j] = static_cast<std::uint32_t>(acc);
    }
}

}  // namespace planecomp::kernels
