#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "legcord/simd.hpp"

namespace legcord::simd {

namespace {

std::atomic<int> g_level{-1};

Level detect() {
    const char* env = std::getenv("LEGCORD_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Level::scalar;
    return avx2_supported() ? Level::avx2 : Level::scalar;
}

}  // namespace

bool avx2_supported() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}

Level active_level() {
    int l = g_level.load(std::memory_order_relaxed);
    if (l < 0) {
        l = static_cast<int>(detect());
        g_level.store(l, std::memory_order_relaxed);
    }
    return static_cast<Level>(l);
}

void force_level(Level level) {
    if (level == Level::avx2 && !avx2_supported()) throw std::runtime_error("AVX2 not supported on this CPU");
    g_level.store(static_cast<int>(level), std::memory_order_relaxed);
}

std::string level_name(Level level) { return level == Level::avx2 ? "avx2" : "scalar"; }

void add_checked(int64_t* dst, const int64_t* src, size_t n) {
    bool ok = active_level() == Level::avx2 ? avx2::add_checked(dst, src, n) : scalar::add_checked(dst, src, n);
    if (!ok) throw std::overflow_error("integer overflow in ruling weight accumulation");
}

void conjugate_adjacent(uint8_t* p, int i) {
    if (active_level() == Level::avx2) avx2::conjugate_adjacent(p, i);
    else scalar::conjugate_adjacent(p, i);
}

}  // namespace legcord::simd
