#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace legcord::simd {

enum class Level { scalar, avx2 };

// Level in use; picked from the CPU on first call unless LEGCORD_SIMD=scalar.
Level active_level();
void force_level(Level level);
bool avx2_supported();
std::string level_name(Level level);

// Width of a packed partner array; unused slots hold kEmpty.
constexpr int kLanes = 32;
constexpr uint8_t kEmpty = 0xFF;

// dst[k] += src[k], throwing std::overflow_error on signed overflow.
void add_checked(int64_t* dst, const int64_t* src, size_t n);

// Conjugate the involution p (0-based) by the transposition (i, i+1).
void conjugate_adjacent(uint8_t* p, int i);

namespace scalar {
bool add_checked(int64_t* dst, const int64_t* src, size_t n);
void conjugate_adjacent(uint8_t* p, int i);
}  // namespace scalar

namespace avx2 {
bool add_checked(int64_t* dst, const int64_t* src, size_t n);
void conjugate_adjacent(uint8_t* p, int i);
}  // namespace avx2

}  // namespace legcord::simd
