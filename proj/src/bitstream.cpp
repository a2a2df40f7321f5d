#include "qrtree/bitstream.hpp"

#include <limits>

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

constexpr std::uint64_t kAllOnes = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturated(unsigned width) {
    return width >= 64 ? kAllOnes : (std::uint64_t{1} << width) - 1;
}

unsigned next_width(unsigned base_width, unsigned chunk_index) {
    // Chunk 0 and chunk 1 both use the base width; doubling starts afterwards.
    if (chunk_index <= 1) return base_width;
    return base_width << (chunk_index - 1);
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(std::move(bytes)), bit_length_(bit_length) {
    if (bytes_.size() * 8 < bit_length_) {
        throw Error(ErrorKind::InvalidArgument, "bit length exceeds byte buffer");
    }
    bytes_.resize((bit_length_ + 7) / 8);
    if (bit_length_ % 8 != 0) {
        bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bit_length_ % 8));
    }
}

BitString BitString::from_string(std::string_view bits) {
    BitString out;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (c != ' ' && c != '_') {
            throw Error(ErrorKind::InvalidArgument, std::string("not a bit: '") + c + "'");
        }
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
    return BitString(std::vector<std::uint8_t>(bytes.begin(), bytes.end()), bytes.size() * 8);
}

bool BitString::bit(std::size_t index) const {
    if (index >= bit_length_) {
        throw Error(ErrorKind::InvalidArgument, "bit index out of range");
    }
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

void BitString::push_back(bool bit) {
    if (bit_length_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_length_ % 8));
    ++bit_length_;
}

BitString BitString::slice(std::size_t first, std::size_t count) const {
    if (first > bit_length_ || count > bit_length_ - first) {
        throw Error(ErrorKind::InvalidArgument, "slice out of range");
    }
    BitString out;
    out.bytes_.reserve((count + 7) / 8);
    for (std::size_t i = 0; i < count; ++i) out.push_back(bit(first + i));
    return out;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bit_length_);
    for (std::size_t i = 0; i < bit_length_; ++i) s.push_back(bit(i) ? '1' : '0');
    return s;
}

void BitWriter::write_bits(std::uint64_t value, unsigned width) {
    if (width > 64) {
        throw Error(ErrorKind::InvalidArgument, "field wider than 64 bits");
    }
    if (width < 64 && (value >> width) != 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "value " + std::to_string(value) + " does not fit in " +
                        std::to_string(width) + " bits");
    }
    for (unsigned i = width; i-- > 0;) bits_.push_back((value >> i) & 1u);
}

void BitWriter::write_bit(bool bit) { bits_.push_back(bit); }

void BitWriter::append(const BitString& bits) {
    for (std::size_t i = 0; i < bits.size(); ++i) bits_.push_back(bits.bit(i));
}

BitReader::BitReader(const BitString& bits) : BitReader(bits.bytes(), bits.size()) {}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(bytes), bit_length_(bit_length) {
    if (bytes.size() * 8 < bit_length) {
        throw Error(ErrorKind::InvalidArgument, "bit length exceeds byte buffer");
    }
}

void BitReader::require(std::size_t count) const {
    if (count > remaining()) {
        throw StreamError(ErrorKind::EndOfStream,
                          "needed " + std::to_string(count) + " bits, " +
                              std::to_string(remaining()) + " left",
                          cursor_);
    }
}

bool BitReader::peek(std::size_t offset) const {
    if (offset >= bit_length_) {
        throw StreamError(ErrorKind::EndOfStream, "peek past end", offset);
    }
    return (bytes_[offset / 8] >> (7 - offset % 8)) & 1u;
}

std::uint64_t BitReader::read_bits(unsigned width) {
    if (width > 64) {
        throw Error(ErrorKind::InvalidArgument, "field wider than 64 bits");
    }
    require(width);
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) {
        value = (value << 1) | static_cast<std::uint64_t>(peek(cursor_));
        ++cursor_;
    }
    return value;
}

bool BitReader::read_bit() { return read_bits(1) != 0; }

BitString BitReader::read_slice(std::size_t count) {
    require(count);
    BitString out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(peek(cursor_ + i));
    cursor_ += count;
    return out;
}

void encode_exp(BitWriter& out, std::uint64_t value, unsigned base_width) {
    if (base_width == 0) {
        throw Error(ErrorKind::InvalidArgument, "exponential base width must be positive");
    }
    std::uint64_t rest = value;
    for (unsigned chunk = 0;; ++chunk) {
        const unsigned width = next_width(base_width, chunk);
        const std::uint64_t max = saturated(width);
        const bool wide = width > 64;
        if (wide || rest < max) {
            if (wide) {
                for (unsigned i = 0; i < width - 64; ++i) out.write_bit(false);
            }
            out.write_bits(rest, wide ? 64 : width);
            return;
        }
        for (unsigned i = 0; i < width; ++i) out.write_bit(true);
        rest -= max;
    }
}

BitString encode_exp(std::uint64_t value, unsigned base_width) {
    BitWriter w;
    encode_exp(w, value, base_width);
    return std::move(w).take();
}

std::size_t exp_length(std::uint64_t value, unsigned base_width) {
    if (base_width == 0) {
        throw Error(ErrorKind::InvalidArgument, "exponential base width must be positive");
    }
    std::size_t length = 0;
    std::uint64_t rest = value;
    for (unsigned chunk = 0;; ++chunk) {
        const unsigned width = next_width(base_width, chunk);
        length += width;
        const std::uint64_t max = saturated(width);
        if (width > 64 || rest < max) return length;
        rest -= max;
    }
}

std::uint64_t decode_exp(BitReader& in, unsigned base_width) {
    if (base_width == 0) {
        throw Error(ErrorKind::InvalidArgument, "exponential base width must be positive");
    }
    const std::size_t start = in.position();
    std::uint64_t total = 0;
    auto add = [&](std::uint64_t amount) {
        if (total > kAllOnes - amount) {
            throw StreamError(ErrorKind::MalformedStream,
                              "exponential value exceeds 64 bits", start);
        }
        total += amount;
    };
    for (unsigned chunk = 0;; ++chunk) {
        const unsigned width = next_width(base_width, chunk);
        if (width > in.remaining()) {
            throw StreamError(ErrorKind::EndOfStream, "truncated exponential value",
                              in.position());
        }
        if (width > 64) {
            // Any set bit above the low 64 puts the value past the magnitude cap.
            for (unsigned i = 0; i < width - 64; ++i) {
                if (in.read_bit()) {
                    throw StreamError(ErrorKind::MalformedStream,
                                      "exponential value exceeds 64 bits", start);
                }
            }
            add(in.read_bits(64));
            return total;
        }
        const std::uint64_t part = in.read_bits(width);
        add(part);
        if (part != saturated(width)) return total;
    }
}

}  // namespace qrtree
