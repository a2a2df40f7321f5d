#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qrtree/bitstream.hpp"
#include "qrtree/dictionary.hpp"

namespace qrtree {

// End-of-text terminator of inline strings.
inline constexpr char kEtx = '\x03';

enum class StringEncoding { Ascii7 = 0b00, Utf8 = 0b01, Dict = 0b10 };

const char* to_string(StringEncoding encoding);

class StringConstant {
public:
    StringConstant() = default;  // empty ASCII-7 string

    // Throw InvalidArgument on characters the encoding cannot carry (ETX included).
    static StringConstant ascii7(std::string text);
    static StringConstant utf8(std::string text);
    static StringConstant dict(DictScope scope, std::uint64_t index);
    // ASCII-7 when every character fits in 7 bits, UTF-8 otherwise.
    static StringConstant inline_text(std::string text);

    StringEncoding encoding() const noexcept { return encoding_; }
    bool is_dict() const noexcept { return encoding_ == StringEncoding::Dict; }
    const std::string& text() const noexcept { return text_; }
    DictScope scope() const noexcept { return scope_; }
    std::uint64_t index() const noexcept { return index_; }

    friend bool operator==(const StringConstant& a, const StringConstant& b);

private:
    StringEncoding encoding_ = StringEncoding::Ascii7;
    std::string text_;
    DictScope scope_ = DictScope::Global;
    std::uint64_t index_ = 0;
};

bool is_ascii7(std::string_view text);
bool is_valid_utf8(std::string_view text);

// Tag (2 bits) followed by the payload.
void encode_string(BitWriter& out, const StringConstant& value, const DictConfig& dicts);
StringConstant decode_string(BitReader& in, const DictConfig& dicts);
std::size_t encoded_string_length(const StringConstant& value, const DictConfig& dicts);

// Inline text payload (characters + ETX) without the 2-bit tag. DICT_LOCAL words
// use this form behind their own 1-bit encoding flag.
void encode_text_payload(BitWriter& out, StringEncoding encoding, std::string_view text);
std::string decode_text_payload(BitReader& in, StringEncoding encoding);

enum class NumericKind { Int16 = 0b00, Int32 = 0b01, Fp16 = 0b10, Fp32 = 0b11 };

const char* to_string(NumericKind kind);
unsigned width_of(NumericKind kind);
inline bool is_integer(NumericKind kind) {
    return kind == NumericKind::Int16 || kind == NumericKind::Int32;
}

// Integer or real literal, stored as its exact bit pattern so NaN payloads survive.
class NumericConstant {
public:
    NumericConstant() = default;  // INT16 zero

    static NumericConstant int16(std::int64_t value);
    static NumericConstant int32(std::int64_t value);
    // Round to nearest, ties to even.
    static NumericConstant fp16(double value);
    static NumericConstant fp32(float value);
    static NumericConstant from_bits(NumericKind kind, std::uint32_t bits);

    NumericKind kind() const noexcept { return kind_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool is_integer() const noexcept { return qrtree::is_integer(kind_); }

    std::int64_t int_value() const;  // integer kinds only
    double value() const;            // any kind, widened exactly to double

    friend bool operator==(const NumericConstant&, const NumericConstant&) = default;

private:
    NumericConstant(NumericKind kind, std::uint32_t bits) : kind_(kind), bits_(bits) {}

    NumericKind kind_ = NumericKind::Int16;
    std::uint32_t bits_ = 0;
};

void encode_number(BitWriter& out, const NumericConstant& value);
NumericConstant decode_number(BitReader& in, NumericKind kind);

}  // namespace qrtree
