#include "planecomp/grid_eval.hpp"

#include "planecomp/error.hpp"

namespace planecomp {

const char* to_string(GridKernel k) noexcept {
    switch (k) {
        case GridKernel::Scalar: return "scalar";
        case GridKernel::Avx2: return "avx2";
        case GridKernel::Neon: return "neon";
    }
    return "?";
}

bool grid_kernel_available(GridKernel k, std::uint32_t p) noexcept {
    switch (k) {
        case GridKernel::Scalar: return true;
        case GridKernel::Avx2:
#if defined(PLANECOMP_HAVE_AVX2)
            return p < kernels::kLaneModulusLimit && __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case GridKernel::Neon:
#if defined(PLANECOMP_HAVE_NEON)
            return p < kernels::kLaneModulusLimit;
#else
            return false;
#endif
    }
    (void)p;
    return false;
}

GridKernel grid_kernel_for(std::uint32_t p) noexcept {
    if (grid_kernel_available(GridKernel::Avx2, p)) return GridKernel::Avx2;
    if (grid_kernel_available(GridKernel::Neon, p)) return GridKernel::Neon;
    return GridKernel::Scalar;
}

void grid_eval_with(GridKernel k, std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
                    std::span<std::uint32_t> out, std::uint32_t p) {
    if (out.size() < points.size()) throw Error(ErrorKind::DimensionMismatch, "output span too short");
    if (!grid_kernel_available(k, p))
        throw Error(ErrorKind::PreconditionViolated, std::string(to_string(k)) + " kernel unavailable");
    switch (k) {
        case GridKernel::Scalar:
            kernels::grid_eval_scalar(coeffs.data(), coeffs.size(), points.data(), out.data(), points.size(), p);
            return;
        case GridKernel::Avx2:
#if defined(PLANECOMP_HAVE_AVX2)
            kernels::grid_eval_avx2(coeffs.data(), coeffs.size(), points.data(), out.data(), points.size(), p);
#endif
            return;
        case GridKernel::Neon:
#if defined(PLANECOMP_HAVE_NEON)
            kernels::grid_eval_neon(coeffs.data(), coeffs.size(), points.data(), out.data(), points.size(), p);
#endif
            return;
    }
}

void grid_eval(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
               std::span<std::uint32_t> out, std::uint32_t p) {
    grid_eval_with(grid_kernel_for(p), coeffs, points, out, p);
}

}  // namespace planecomp
