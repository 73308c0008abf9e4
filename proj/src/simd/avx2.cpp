#include <immintrin.h>

#include "legcord/simd.hpp"

namespace legcord::simd::avx2 {

bool add_checked(int64_t* dst, const int64_t* src, size_t n) {
    size_t k = 0;
    __m256i bad = _mm256_setzero_si256();
    for (; k + 4 <= n; k += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        __m256i s = _mm256_add_epi64(a, b);
        // overflow iff both operands differ in sign from the sum
        bad = _mm256_or_si256(bad, _mm256_and_si256(_mm256_xor_si256(a, s), _mm256_xor_si256(b, s)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), s);
    }
    bool overflow = _mm256_movemask_pd(_mm256_castsi256_pd(bad)) != 0;
    for (; k < n; ++k) overflow |= __builtin_add_overflow(dst[k], src[k], &dst[k]);
    return !overflow;
}

void conjugate_adjacent(uint8_t* p, int i) {
    uint8_t t = p[i];
    p[i] = p[i + 1];
    p[i + 1] = t;
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
    __m256i a = _mm256_set1_epi8(static_cast<char>(i));
    __m256i b = _mm256_set1_epi8(static_cast<char>(i + 1));
    __m256i is_a = _mm256_cmpeq_epi8(v, a);
    __m256i is_b = _mm256_cmpeq_epi8(v, b);
    v = _mm256_blendv_epi8(v, b, is_a);
    v = _mm256_blendv_epi8(v, a, is_b);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

}  // namespace legcord::simd::avx2
