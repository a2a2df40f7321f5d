#include "qrtree/qr_symbol.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

// Indexed by [level][version]; entry 0 is unused.
constexpr std::array<std::array<std::int8_t, 41>, 4> kEccPerBlock = {{
    {-1, 7,  10, 15, 20, 26, 18, 20, 24, 30, 18, 20, 24, 26, 30, 22, 24, 28, 30, 28, 28,
     28, 28, 30, 30, 26, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
    {-1, 10, 16, 26, 18, 24, 16, 18, 22, 22, 26, 30, 22, 22, 24, 24, 28, 28, 26, 26, 26,
     26, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28, 28},
    {-1, 13, 22, 18, 26, 18, 24, 18, 22, 20, 24, 28, 26, 24, 20, 30, 24, 28, 28, 26, 30,
     28, 30, 30, 30, 30, 28, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
    {-1, 17, 28, 22, 16, 22, 28, 26, 26, 24, 28, 24, 28, 22, 24, 24, 30, 28, 28, 26, 28,
     30, 24, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30, 30},
}};

constexpr std::array<std::array<std::int8_t, 41>, 4> kBlocks = {{
    {-1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 4,  4,  4,  4,  4,  6,  6,  6,  6,  7,  8,
     8,  9, 9, 10, 12, 12, 12, 13, 14, 15, 16, 17, 18, 19, 19, 20, 21, 22, 24, 25},
    {-1, 1,  1,  1,  2,  2,  4,  4,  4,  5,  5,  5,  8,  9,  9,  10, 10, 11, 13, 14, 16,
     17, 17, 18, 20, 21, 23, 25, 26, 28, 29, 31, 33, 35, 37, 38, 40, 43, 45, 47, 49},
    {-1, 1,  1,  2,  2,  4,  4,  6,  6,  8,  8,  8,  10, 12, 16, 12, 17, 16, 18, 21, 20,
     23, 23, 25, 27, 29, 34, 34, 35, 38, 40, 43, 45, 48, 51, 53, 56, 59, 62, 65, 68},
    {-1, 1,  1,  2,  4,  4,  4,  5,  6,  8,  8,  11, 11, 16, 16, 18, 16, 19, 21, 25, 25,
     25, 34, 30, 32, 35, 37, 40, 42, 45, 48, 51, 54, 57, 60, 63, 66, 70, 74, 77, 81},
}};

int level_index(EcLevel level) { return static_cast<int>(level); }

// Format-information code of each level.
int format_code(EcLevel level) {
    switch (level) {
        case EcLevel::Low: return 1;
        case EcLevel::Medium: return 0;
        case EcLevel::Quartile: return 3;
        case EcLevel::High: return 2;
    }
    return 0;
}

int raw_data_modules(int version) {
    int result = (16 * version + 128) * version + 64;
    if (version >= 2) {
        const int align = version / 7 + 2;
        result -= (25 * align - 10) * align - 55;
        if (version >= 7) result -= 36;
    }
    return result;
}

int data_codewords(int version, EcLevel level) {
    const int l = level_index(level);
    return raw_data_modules(version) / 8 - kEccPerBlock[l][version] * kBlocks[l][version];
}

int count_bits(int version) { return version < 10 ? 8 : 16; }

std::vector<int> alignment_positions(int version) {
    if (version == 1) return {};
    const int count = version / 7 + 2;
    const int size = version * 4 + 17;
    const int step = version == 32 ? 26 : (version * 4 + count * 2 + 1) / (count * 2 - 2) * 2;
    std::vector<int> result(static_cast<std::size_t>(count));
    result[0] = 6;
    for (int i = count - 1, pos = size - 7; i >= 1; --i, pos -= step) {
        result[static_cast<std::size_t>(i)] = pos;
    }
    return result;
}

std::uint8_t gf_multiply(std::uint8_t x, std::uint8_t y) {
    int z = 0;
    for (int i = 7; i >= 0; --i) {
        z = (z << 1) ^ ((z >> 7) * 0x11D);
        z ^= ((y >> i) & 1) * x;
    }
    return static_cast<std::uint8_t>(z);
}

bool mask_bit(int mask, int x, int y) {
    switch (mask) {
        case 0: return (x + y) % 2 == 0;
        case 1: return y % 2 == 0;
        case 2: return x % 3 == 0;
        case 3: return (x + y) % 3 == 0;
        case 4: return (x / 3 + y / 2) % 2 == 0;
        case 5: return x * y % 2 + x * y % 3 == 0;
        case 6: return (x * y % 2 + x * y % 3) % 2 == 0;
        case 7: return ((x + y) % 2 + x * y % 3) % 2 == 0;
    }
    return false;
}

std::vector<std::uint8_t> interleave_with_ecc(const std::vector<std::uint8_t>& data, int version,
                                              EcLevel level) {
    const int l = level_index(level);
    const int blocks = kBlocks[l][version];
    const int ecc_len = kEccPerBlock[l][version];
    const int raw_codewords = raw_data_modules(version) / 8;
    const int short_blocks = blocks - raw_codewords % blocks;
    const int short_len = raw_codewords / blocks;

    const auto divisor = reed_solomon_divisor(ecc_len);
    std::vector<std::vector<std::uint8_t>> all;
    std::size_t k = 0;
    for (int i = 0; i < blocks; ++i) {
        const auto len = static_cast<std::size_t>(short_len - ecc_len + (i < short_blocks ? 0 : 1));
        std::vector<std::uint8_t> block(data.begin() + static_cast<std::ptrdiff_t>(k),
                                        data.begin() + static_cast<std::ptrdiff_t>(k + len));
        k += len;
        const auto ecc = reed_solomon_remainder(block, divisor);
        if (i < short_blocks) block.push_back(0);  // placeholder, skipped below
        block.insert(block.end(), ecc.begin(), ecc.end());
        all.push_back(std::move(block));
    }
    std::vector<std::uint8_t> result;
    for (std::size_t i = 0; i < all[0].size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i != static_cast<std::size_t>(short_len - ecc_len) ||
                j >= static_cast<std::size_t>(short_blocks)) {
                result.push_back(all[j][i]);
            }
        }
    }
    return result;
}

}  // namespace

const char* to_string(EcLevel level) {
    switch (level) {
        case EcLevel::Low: return "L";
        case EcLevel::Medium: return "M";
        case EcLevel::Quartile: return "Q";
        case EcLevel::High: return "H";
    }
    return "?";
}

std::size_t byte_capacity(int version, EcLevel level) {
    if (version < kMinQrVersion || version > kMaxQrVersion) {
        throw Error(ErrorKind::InvalidArgument, "QR version must be 1-40");
    }
    const int bits = data_codewords(version, level) * 8 - 4 - count_bits(version);
    return static_cast<std::size_t>(bits / 8);
}

std::vector<std::uint8_t> reed_solomon_divisor(int degree) {
    std::vector<std::uint8_t> result(static_cast<std::size_t>(degree), 0);
    result.back() = 1;
    std::uint8_t root = 1;
    for (int i = 0; i < degree; ++i) {
        for (std::size_t j = 0; j < result.size(); ++j) {
            result[j] = gf_multiply(result[j], root);
            if (j + 1 < result.size()) result[j] ^= result[j + 1];
        }
        root = gf_multiply(root, 0x02);
    }
    return result;
}

std::vector<std::uint8_t> reed_solomon_remainder(std::span<const std::uint8_t> data,
                                                 std::span<const std::uint8_t> divisor) {
    std::vector<std::uint8_t> result(divisor.size(), 0);
    for (std::uint8_t b : data) {
        const std::uint8_t factor = b ^ result.front();
        result.erase(result.begin());
        result.push_back(0);
        for (std::size_t i = 0; i < result.size(); ++i) result[i] ^= gf_multiply(divisor[i], factor);
    }
    return result;
}

QrSymbol::QrSymbol(int version, EcLevel level)
    : version_(version),
      level_(level),
      size_(version * 4 + 17),
      modules_(static_cast<std::size_t>(size_ * size_), 0),
      function_(static_cast<std::size_t>(size_ * size_), 0) {}

void QrSymbol::set_function(int x, int y, bool is_dark) {
    const auto i = static_cast<std::size_t>(y * size_ + x);
    modules_[i] = is_dark ? 1 : 0;
    function_[i] = 1;
}

void QrSymbol::draw_finder(int cx, int cy) {
    for (int dy = -4; dy <= 4; ++dy) {
        for (int dx = -4; dx <= 4; ++dx) {
            const int dist = std::max(std::abs(dx), std::abs(dy));
            const int x = cx + dx;
            const int y = cy + dy;
            if (x >= 0 && x < size_ && y >= 0 && y < size_) set_function(x, y, dist != 2 && dist != 4);
        }
    }
}

void QrSymbol::draw_alignment(int cx, int cy) {
    for (int dy = -2; dy <= 2; ++dy) {
        for (int dx = -2; dx <= 2; ++dx) {
            set_function(cx + dx, cy + dy, std::max(std::abs(dx), std::abs(dy)) != 1);
        }
    }
}

void QrSymbol::draw_format_bits(int mask) {
    const int data = format_code(level_) << 3 | mask;
    int rem = data;
    for (int i = 0; i < 10; ++i) rem = (rem << 1) ^ ((rem >> 9) * 0x537);
    const int bits = (data << 10 | rem) ^ 0x5412;
    auto bit = [&](int i) { return ((bits >> i) & 1) != 0; };

    for (int i = 0; i <= 5; ++i) set_function(8, i, bit(i));
    set_function(8, 7, bit(6));
    set_function(8, 8, bit(7));
    set_function(7, 8, bit(8));
    for (int i = 9; i < 15; ++i) set_function(14 - i, 8, bit(i));
    for (int i = 0; i < 8; ++i) set_function(size_ - 1 - i, 8, bit(i));
    for (int i = 8; i < 15; ++i) set_function(8, size_ - 15 + i, bit(i));
    set_function(8, size_ - 8, true);
}

void QrSymbol::draw_version() {
    if (version_ < 7) return;
    int rem = version_;
    for (int i = 0; i < 12; ++i) rem = (rem << 1) ^ ((rem >> 11) * 0x1F25);
    const long bits = static_cast<long>(version_) << 12 | rem;
    for (int i = 0; i < 18; ++i) {
        const bool b = ((bits >> i) & 1) != 0;
        const int a = size_ - 11 + i % 3;
        const int c = i / 3;
        set_function(a, c, b);
        set_function(c, a, b);
    }
}

void QrSymbol::draw_function_patterns() {
    for (int i = 0; i < size_; ++i) {
        set_function(6, i, i % 2 == 0);
        set_function(i, 6, i % 2 == 0);
    }
    draw_finder(3, 3);
    draw_finder(size_ - 4, 3);
    draw_finder(3, size_ - 4);

    const auto positions = alignment_positions(version_);
    const std::size_t n = positions.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool corner = (i == 0 && j == 0) || (i == 0 && j == n - 1) || (i == n - 1 && j == 0);
            if (!corner) draw_alignment(positions[i], positions[j]);
        }
    }
    draw_format_bits(0);  // reserved; rewritten once the mask is known
    draw_version();
}

void QrSymbol::draw_codewords(const std::vector<std::uint8_t>& codewords) {
    std::size_t i = 0;
    const std::size_t total_bits = codewords.size() * 8;
    for (int right = size_ - 1; right >= 1; right -= 2) {
        if (right == 6) right = 5;
        for (int vert = 0; vert < size_; ++vert) {
            for (int j = 0; j < 2; ++j) {
                const int x = right - j;
                const bool upward = ((right + 1) & 2) == 0;
                const int y = upward ? size_ - 1 - vert : vert;
                const auto idx = static_cast<std::size_t>(y * size_ + x);
                if (!function_[idx] && i < total_bits) {
                    modules_[idx] = (codewords[i >> 3] >> (7 - (i & 7))) & 1;
                    ++i;
                }
            }
        }
    }
}

void QrSymbol::apply_mask(int mask) {
    for (int y = 0; y < size_; ++y) {
        for (int x = 0; x < size_; ++x) {
            const auto idx = static_cast<std::size_t>(y * size_ + x);
            if (!function_[idx] && mask_bit(mask, x, y)) modules_[idx] ^= 1;
        }
    }
}

long QrSymbol::penalty() const {
    long result = 0;
    auto line_penalty = [&](auto at) {
        for (int a = 0; a < size_; ++a) {
            int run = 0;
            bool color = false;
            for (int b = 0; b < size_; ++b) {
                const bool d = at(a, b);
                if (b > 0 && d == color) {
                    ++run;
                } else {
                    if (run >= 5) result += 3 + (run - 5);
                    color = d;
                    run = 1;
                }
            }
            if (run >= 5) result += 3 + (run - 5);
            // Finder-like 1:1:3:1:1 with four light modules on one side.
            for (int b = 0; b + 11 <= size_; ++b) {
                static constexpr bool kPattern[] = {1, 0, 1, 1, 1, 0, 1};
                bool core = true;
                for (int k = 0; k < 7 && core; ++k) core = at(a, b + k + 4) == kPattern[k];
                bool before = core;
                for (int k = 0; k < 4 && before; ++k) before = !at(a, b + k);
                if (before) result += 40;
                core = true;
                for (int k = 0; k < 7 && core; ++k) core = at(a, b + k) == kPattern[k];
                bool after = core;
                for (int k = 7; k < 11 && after; ++k) after = !at(a, b + k);
                if (after) result += 40;
            }
        }
    };
    line_penalty([&](int row, int col) { return dark(col, row); });
    line_penalty([&](int col, int row) { return dark(col, row); });

    long dark_count = 0;
    for (int y = 0; y < size_; ++y) {
        for (int x = 0; x < size_; ++x) {
            dark_count += dark(x, y);
            if (x + 1 < size_ && y + 1 < size_) {
                const bool c = dark(x, y);
                if (c == dark(x + 1, y) && c == dark(x, y + 1) && c == dark(x + 1, y + 1)) result += 3;
            }
        }
    }
    const long total = static_cast<long>(size_) * size_;
    const long k = (std::abs(dark_count * 20 - total * 10) + total - 1) / total - 1;
    result += k * 10;
    return result;
}

QrSymbol QrSymbol::encode(std::span<const std::uint8_t> data, EcLevel level, int min_version,
                          int max_version, std::optional<int> mask) {
    if (data.empty()) throw Error(ErrorKind::EmptyPayload, "nothing to encode");
    if (min_version < kMinQrVersion || max_version > kMaxQrVersion || min_version > max_version) {
        throw Error(ErrorKind::InvalidArgument, "QR version range must lie within 1-40");
    }
    if (mask && (*mask < 0 || *mask > 7)) throw Error(ErrorKind::InvalidArgument, "mask must be 0-7");

    int version = min_version;
    while (version <= max_version && byte_capacity(version, level) < data.size()) ++version;
    if (version > max_version) {
        const std::size_t cap = byte_capacity(max_version, level);
        throw CapacityError(std::to_string(data.size()) + " bytes exceed the " +
                                std::to_string(cap) + "-byte capacity of version " +
                                std::to_string(max_version) + "-" + to_string(level),
                            (data.size() + cap - 1) / cap);
    }

    const int capacity_bits = data_codewords(version, level) * 8;
    std::vector<bool> bits;
    auto append = [&](std::uint32_t value, int width) {
        for (int i = width - 1; i >= 0; --i) bits.push_back(((value >> i) & 1) != 0);
    };
    append(0b0100, 4);  // byte mode
    append(static_cast<std::uint32_t>(data.size()), count_bits(version));
    for (std::uint8_t b : data) append(b, 8);
    append(0, std::min(4, capacity_bits - static_cast<int>(bits.size())));
    append(0, static_cast<int>((8 - bits.size() % 8) % 8));
    for (std::uint8_t pad = 0xEC; static_cast<int>(bits.size()) < capacity_bits; pad ^= 0xEC ^ 0x11) {
        append(pad, 8);
    }
    std::vector<std::uint8_t> codewords(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) codewords[i >> 3] |= static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    }

    QrSymbol symbol(version, level);
    symbol.draw_function_patterns();
    symbol.draw_codewords(interleave_with_ecc(codewords, version, level));

    int chosen = mask.value_or(-1);
    if (chosen < 0) {
        long best = std::numeric_limits<long>::max();
        for (int m = 0; m < 8; ++m) {
            symbol.apply_mask(m);
            symbol.draw_format_bits(m);
            const long p = symbol.penalty();
            if (p < best) {
                best = p;
                chosen = m;
            }
            symbol.apply_mask(m);  // XOR again to undo
        }
    }
    symbol.apply_mask(chosen);
    symbol.draw_format_bits(chosen);
    symbol.mask_ = chosen;
    return symbol;
}

}  // namespace qrtree
