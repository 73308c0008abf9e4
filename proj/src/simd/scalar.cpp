#include "legcord/simd.hpp"

namespace legcord::simd::scalar {

bool add_checked(int64_t* dst, const int64_t* src, size_t n) {
    bool overflow = false;
    for (size_t k = 0; k < n; ++k) overflow |= __builtin_add_overflow(dst[k], src[k], &dst[k]);
    return !overflow;
}

void conjugate_adjacent(uint8_t* p, int i) {
    uint8_t a = static_cast<uint8_t>(i), b = static_cast<uint8_t>(i + 1);
    uint8_t t = p[i];
    p[i] = p[i + 1];
    p[i + 1] = t;
    for (int k = 0; k < kLanes; ++k) {
        if (p[k] == a) p[k] = b;
        else if (p[k] == b) p[k] = a;
    }
}

}  // namespace legcord::simd::scalar
