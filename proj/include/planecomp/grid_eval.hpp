#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace planecomp {

enum class GridKernel { Scalar, Avx2, Neon };

const char* to_string(GridKernel k) noexcept;

/// out[j] = sum_i coeffs[i] * points[j]^i mod p. Coefficients and points
/// must already be reduced mod p; p < 2^31.
void grid_eval(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
               std::span<std::uint32_t> out, std::uint32_t p);

/// The variant grid_eval would use for modulus p on this machine.
GridKernel grid_kernel_for(std::uint32_t p) noexcept;
/// Whether `k` can run here for modulus p.
bool grid_kernel_available(GridKernel k, std::uint32_t p) noexcept;
/// Runs one variant explicitly; throws PreconditionViolated if unavailable.
void grid_eval_with(GridKernel k, std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
                    std::span<std::uint32_t> out, std::uint32_t p);

namespace kernels {

// Lane kernels use an exact float quotient estimate, so they need
// (p-1)^2 + p < 2^24.
inline constexpr std::uint32_t kLaneModulusLimit = 2048;

void grid_eval_scalar(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                      std::size_t m, std::uint32_t p);
#if defined(PLANECOMP_HAVE_AVX2)
void grid_eval_avx2(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                    std::size_t m, std::uint32_t p);
#endif
#if defined(PLANECOMP_HAVE_NEON)
void grid_eval_neon(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                    std::size_t m, std::uint32_t p);
#endif

}  // namespace kernels

}  // namespace planecomp
