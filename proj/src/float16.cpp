#include "qrtree/float16.hpp"

#include <bit>
#include <cmath>
#include <limits>

namespace qrtree {

static_assert(std::numeric_limits<float>::is_iec559);
static_assert(std::numeric_limits<double>::is_iec559);

std::uint32_t float_bits(float value) { return std::bit_cast<std::uint32_t>(value); }

float float_from_bits(std::uint32_t bits) { return std::bit_cast<float>(bits); }

float half_to_float(std::uint16_t half) {
    const std::uint32_t sign = static_cast<std::uint32_t>(half & 0x8000u) << 16;
    const std::uint32_t exponent = (half >> 10) & 0x1Fu;
    std::uint32_t mantissa = half & 0x3FFu;

    if (exponent == 0x1F) {
        return float_from_bits(sign | 0x7F80'0000u | (mantissa << 13));
    }
    if (exponent != 0) {
        return float_from_bits(sign | ((exponent + 127 - 15) << 23) | (mantissa << 13));
    }
    if (mantissa == 0) return float_from_bits(sign);

    // Subnormal half: normalize into the float's wider exponent range.
    std::uint32_t e = 127 - 15 + 1;
    while ((mantissa & 0x400u) == 0) {
        mantissa <<= 1;
        --e;
    }
    mantissa &= 0x3FFu;
    return float_from_bits(sign | (e << 23) | (mantissa << 13));
}

std::uint16_t half_from_double(double value) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
    const std::uint16_t sign = static_cast<std::uint16_t>((bits >> 48) & 0x8000u);
    const int exponent = static_cast<int>((bits >> 52) & 0x7FFu);
    const std::uint64_t fraction = bits & 0x000F'FFFF'FFFF'FFFFull;

    if (exponent == 0x7FF) {
        if (fraction == 0) return sign | 0x7C00u;
        std::uint16_t payload = static_cast<std::uint16_t>(fraction >> 42);
        if (payload == 0) payload = 0x200u;  // keep it a NaN, not infinity
        return sign | 0x7C00u | payload;
    }
    if (exponent == 0 && fraction == 0) return sign;

    // value = significand * 2^(unbiased - 52), significand with the hidden bit.
    const std::uint64_t significand =
        exponent == 0 ? fraction : (fraction | 0x0010'0000'0000'0000ull);
    const int unbiased = exponent == 0 ? -1022 : exponent - 1023;

    // Quantum of the target: 2^-24 for subnormals, 2^(unbiased-10) for normals.
    const int quantum_exp = unbiased < -14 ? -24 : unbiased - 10;
    const int shift = quantum_exp - (unbiased - 52);
    if (shift > 63) return sign;  // far below the smallest subnormal

    std::uint64_t kept = significand >> shift;
    const std::uint64_t dropped = significand & ((std::uint64_t{1} << shift) - 1);
    const std::uint64_t halfway = std::uint64_t{1} << (shift - 1);
    if (dropped > halfway || (dropped == halfway && (kept & 1u))) ++kept;

    if (unbiased < -14) {
        // kept is the subnormal mantissa; rounding may promote it to the smallest normal.
        return sign | static_cast<std::uint16_t>(kept);
    }
    int half_exponent = unbiased + 15;
    if (kept == 0x800u) {
        kept >>= 1;
        ++half_exponent;
    }
    if (half_exponent >= 0x1F) return sign | 0x7C00u;
    return sign | static_cast<std::uint16_t>(half_exponent << 10) |
           static_cast<std::uint16_t>(kept & 0x3FFu);
}

std::uint16_t half_from_float(float value) {
    // Widening to double would quiet a signalling NaN; take the payload from the float bits.
    const std::uint32_t bits = float_bits(value);
    if ((bits & 0x7F80'0000u) == 0x7F80'0000u && (bits & 0x007F'FFFFu) != 0) {
        std::uint16_t payload = static_cast<std::uint16_t>((bits >> 13) & 0x3FFu);
        if (payload == 0) payload = 0x200u;
        return static_cast<std::uint16_t>((bits >> 16) & 0x8000u) | 0x7C00u | payload;
    }
    return half_from_double(static_cast<double>(value));
}

}  // namespace qrtree
