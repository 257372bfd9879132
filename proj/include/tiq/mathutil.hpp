#ifndef TIQ_MATHUTIL_HPP
#define TIQ_MATHUTIL_HPP

#include <bit>
#include <cmath>
#include <cstdint>

namespace tiq {

/// Smallest L with 2^L >= n; 0 for n <= 1. All running-time and budget
/// formulas in this project use this integer log.
inline std::uint32_t ceil_log2(std::uint64_t n) {
    if (n <= 1) return 0;
    return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

/// ceil(x) for a positive double, as a 64-bit count; saturates at the
/// largest representable value instead of overflowing.
inline std::uint64_t ceil_u64(double x) {
    if (x <= 0.0) return 0;
    const double c = std::ceil(x);
    // Largest double strictly below 2^64.
    if (c >= 18446744073709549568.0) return UINT64_MAX;
    return static_cast<std::uint64_t>(c);
}

inline std::uint64_t binom3(std::uint64_t n) {
    if (n < 3) return 0;
    return n * (n - 1) / 2 * (n - 2) / 3;
}

} // namespace tiq

#endif
