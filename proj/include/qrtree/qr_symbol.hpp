#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qrtree {

enum class EcLevel { Low, Medium, Quartile, High };

const char* to_string(EcLevel level);

inline constexpr int kMinQrVersion = 1;
inline constexpr int kMaxQrVersion = 40;

// Largest byte-mode payload of a symbol.
std::size_t byte_capacity(int version, EcLevel level);

// A QR code symbol (model 2) carrying one byte-mode segment.
class QrSymbol {
public:
    // Smallest version in [min_version, max_version] that fits. Throws
    // CapacityExceeded when none does and EmptyPayload for no data. A fixed mask
    // (0-7) may be forced; otherwise the lowest-penalty one is chosen.
    static QrSymbol encode(std::span<const std::uint8_t> data, EcLevel level,
                           int min_version = kMinQrVersion, int max_version = kMaxQrVersion,
                           std::optional<int> mask = std::nullopt);

    int version() const noexcept { return version_; }
    EcLevel level() const noexcept { return level_; }
    int mask() const noexcept { return mask_; }
    int size() const noexcept { return size_; }
    bool dark(int x, int y) const { return modules_[static_cast<std::size_t>(y * size_ + x)] != 0; }

private:
    QrSymbol(int version, EcLevel level);

    void draw_function_patterns();
    void draw_finder(int cx, int cy);
    void draw_alignment(int cx, int cy);
    void draw_format_bits(int mask);
    void draw_version();
    void draw_codewords(const std::vector<std::uint8_t>& codewords);
    void apply_mask(int mask);
    long penalty() const;
    void set_function(int x, int y, bool is_dark);

    int version_;
    EcLevel level_;
    int mask_ = 0;
    int size_;
    std::vector<std::uint8_t> modules_;
    std::vector<std::uint8_t> function_;
};

// Reed-Solomon over GF(2^8) with the 0x11D field polynomial.
std::vector<std::uint8_t> reed_solomon_divisor(int degree);
std::vector<std::uint8_t> reed_solomon_remainder(std::span<const std::uint8_t> data,
                                                 std::span<const std::uint8_t> divisor);

}  // namespace qrtree
