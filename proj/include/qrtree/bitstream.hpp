#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrtree {

// An owned, MSB-first sequence of bits backed by whole bytes. Unused bits of the
// final byte are always zero.
class BitString {
public:
    BitString() = default;
    BitString(std::vector<std::uint8_t> bytes, std::size_t bit_length);

    // Parses a string of '0'/'1' characters; spaces are ignored.
    static BitString from_string(std::string_view bits);
    static BitString from_bytes(std::span<const std::uint8_t> bytes);

    std::size_t size() const noexcept { return bit_length_; }
    bool empty() const noexcept { return bit_length_ == 0; }
    bool bit(std::size_t index) const;

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    // Copies bits [first, first + count) into a new BitString.
    BitString slice(std::size_t first, std::size_t count) const;

    void push_back(bool bit);

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_length_ = 0;
};

class BitWriter {
public:
    // Appends the low `width` bits of value, most significant first.
    // Throws InvalidArgument if width > 64 or value does not fit in width bits.
    void write_bits(std::uint64_t value, unsigned width);
    void write_bit(bool bit);
    void append(const BitString& bits);

    std::size_t size() const noexcept { return bits_.size(); }
    const BitString& bits() const noexcept { return bits_; }
    BitString take() && { return std::move(bits_); }

private:
    BitString bits_;
};

class BitReader {
public:
    explicit BitReader(const BitString& bits);
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length);

    // Reads `width` bits (≤ 64) MSB-first. Throws StreamError(EndOfStream) when fewer remain.
    std::uint64_t read_bits(unsigned width);
    bool read_bit();
    BitString read_slice(std::size_t count);

    std::size_t position() const noexcept { return cursor_; }
    std::size_t size() const noexcept { return bit_length_; }
    std::size_t remaining() const noexcept { return bit_length_ - cursor_; }
    bool at_end() const noexcept { return cursor_ == bit_length_; }

    // Returns bit at absolute offset without moving the cursor.
    bool peek(std::size_t offset) const;

private:
    void require(std::size_t count) const;

    std::span<const std::uint8_t> bytes_;
    std::size_t bit_length_;
    std::size_t cursor_ = 0;
};

// Exponential (doubling) unsigned integer code. Chunk widths run n0, n0, 2*n0, 4*n0, ...;
// an all-ones chunk contributes 2^w - 1 and announces another chunk, any other chunk
// terminates the value.
void encode_exp(BitWriter& out, std::uint64_t value, unsigned base_width);
std::uint64_t decode_exp(BitReader& in, unsigned base_width);
std::size_t exp_length(std::uint64_t value, unsigned base_width);

BitString encode_exp(std::uint64_t value, unsigned base_width);

}  // namespace qrtree
