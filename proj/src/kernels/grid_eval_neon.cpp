#include <arm_neon.h>

#include "planecomp/grid_eval.hpp"

namespace planecomp::kernels {

namespace {

inline uint32x4_t mod_lanes(uint32x4_t v, float32x4_t inv_p, uint32x4_t p) {
    float32x4_t q = vrndmq_f32(vmulq_f32(vcvtq_f32_u32(v), inv_p));
    int32x4_t r = vsubq_s32(vreinterpretq_s32_u32(v), vreinterpretq_s32_u32(vmulq_u32(vcvtq_u32_f32(q), p)));
    int32x4_t sp = vreinterpretq_s32_u32(p);
    r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcltq_s32(r, vdupq_n_s32(0))), sp));
    r = vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(vcgeq_s32(r, sp)), sp));
    return vreinterpretq_u32_s32(r);
}

}  // namespace

void grid_eval_neon(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                    std::size_t m, std::uint32_t p) {
    const uint32x4_t vp = vdupq_n_u32(p);
    const float32x4_t inv = vdupq_n_f32(1.0f / static_cast<float>(p));
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        uint32x4_t x = vld1q_u32(points + j);
        uint32x4_t acc = vdupq_n_u32(0);
        for (std::size_t i = n; i-- > 0;) {
            acc = vaddq_u32(vmulq_u32(acc, x), vdupq_n_u32(coeffs[i]));
            acc = mod_lanes(acc, inv, vp);
        }
        vst1q_u32(out + j, acc);
    }
    if (j < m) grid_eval_scalar(coeffs, n, points + j, out + j, m - j, p);
}

}  // namespace planecomp::kernels
