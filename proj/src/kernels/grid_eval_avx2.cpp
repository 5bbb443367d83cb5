#include <immintrin.h>

#include "planecomp/grid_eval.hpp"

namespace planecomp::kernels {

namespace {

// v mod p for 0 <= v < 2^24, lane-wise.
inline __m256i mod_lanes(__m256i v, __m256 inv_p, __m256i p) {
    __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(v), inv_p));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(_mm256_cvtps_epi32(q), p));
    // the estimate can be off by one either way
    __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, p));
    __m256i big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(p, _mm256_set1_epi32(1)));
    return _mm256_sub_epi32(r, _mm256_and_si256(big, p));
}

}  // namespace

void grid_eval_avx2(const std::uint32_t* coeffs, std::size_t n, const std::uint32_t* points, std::uint32_t* out,
                    std::size_t m, std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(p));
    std::size_t j = 0;
    for (; j + 8 <= m; j += 8) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(points + j));
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t i = n; i-- > 0;) {
            acc = _mm256_add_epi32(_mm256_mullo_epi32(acc, x), _mm256_set1_epi32(static_cast<int>(coeffs[i])));
            acc = mod_lanes(acc, inv, vp);
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
    }
    if (j < m) grid_eval_scalar(coeffs, n, points + j, out + j, m - j, p);
}

}  // namespace planecomp::kernels
