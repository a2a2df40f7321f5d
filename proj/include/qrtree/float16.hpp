#pragma once

#include <cstdint>

namespace qrtree {

// IEEE 754 binary16 <-> wider formats. half_to_float is exact; the narrowing
// conversions round to nearest, ties to even. NaN payload bits that fit are kept.
float half_to_float(std::uint16_t half);
std::uint16_t half_from_double(double value);
std::uint16_t half_from_float(float value);

std::uint32_t float_bits(float value);
float float_from_bits(std::uint32_t bits);

}  // namespace qrtree
