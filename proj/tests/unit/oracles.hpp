// Independent reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

// Exponential code as a '0'/'1' string: chunk k has width n0 for k < 2 and
// n0 * 2^(k-1) afterwards; saturated chunks mean "more follows".
inline std::string exp_code(std::uint64_t value, unsigned n0) {
    std::string out;
    unsigned long long rest = value;
    for (unsigned k = 0;; ++k) {
        const unsigned width = k < 2 ? n0 : n0 << (k - 1);
        const unsigned long long full = width >= 64 ? ~0ULL : (1ULL << width) - 1;
        const bool saturate = width < 64 && rest >= full;
        const unsigned long long chunk = saturate ? full : rest;
        for (unsigned b = width; b-- > 0;) out.push_back(b < 64 && ((chunk >> b) & 1ULL) ? '1' : '0');
        if (!saturate) return out;
        rest -= full;
    }
}

inline std::string strip(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

inline std::string binary(std::uint64_t value, unsigned width) {
    std::string out;
    for (unsigned b = width; b-- > 0;) out.push_back(((value >> b) & 1ULL) ? '1' : '0');
    return out;
}

// 7-bit characters followed by ETX.
inline std::string ascii7_payload(const std::string& text) {
    std::string out;
    for (unsigned char c : text) out += binary(c, 7);
    return out + "0000011";
}

inline std::string utf8_payload(const std::string& text) {
    std::string out;
    for (unsigned char c : text) out += binary(c, 8);
    return out + "00000011";
}

// binary16 value by direct evaluation of its fields.
inline double half_value(std::uint16_t h) {
    const int sign = h >> 15;
    const int exponent = (h >> 10) & 0x1F;
    const int fraction = h & 0x3FF;
    double magnitude;
    if (exponent == 0) {
        magnitude = std::ldexp(static_cast<double>(fraction), -24);
    } else if (exponent == 31) {
        magnitude = fraction ? std::nan("") : INFINITY;
    } else {
        magnitude = std::ldexp(1024.0 + fraction, exponent - 25);
    }
    return sign ? -magnitude : magnitude;
}

// Nearest binary16 by searching every finite non-negative pattern; ties go to the
// even pattern, and anything at or past the midpoint above the largest finite half
// becomes infinity.
class HalfRounder {
public:
    HalfRounder() {
        for (std::uint16_t h = 0; h < 0x7C00; ++h) values_.push_back(half_value(h));
    }

    std::uint16_t round(double x) const {
        const std::uint16_t sign = std::signbit(x) ? 0x8000 : 0;
        const double a = std::fabs(x);
        const double limit = 65504.0 + 16.0;  // midpoint to the next (absent) step
        if (a >= limit) return sign | 0x7C00;
        auto it = std::lower_bound(values_.begin(), values_.end(), a);
        if (it == values_.end()) return sign | 0x7BFF;
        std::size_t hi = static_cast<std::size_t>(it - values_.begin());
        if (values_[hi] == a || hi == 0) return sign | static_cast<std::uint16_t>(hi);
        const std::size_t lo = hi - 1;
        const double dlo = a - values_[lo];
        const double dhi = values_[hi] - a;
        std::size_t pick = dlo < dhi ? lo : dhi < dlo ? hi : (lo % 2 == 0 ? lo : hi);
        return sign | static_cast<std::uint16_t>(pick);
    }

private:
    std::vector<double> values_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace oracle

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(QRTREE_FIXTURES) / name;
}
