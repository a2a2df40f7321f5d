#include "qrtree/datatypes.hpp"

#include <limits>

#include "qrtree/error.hpp"
#include "qrtree/float16.hpp"

namespace qrtree {
namespace {

constexpr std::uint64_t kEtx7 = 0b0000011;
constexpr std::uint64_t kEtx8 = 0b00000011;

}  // namespace

const char* to_string(StringEncoding encoding) {
    switch (encoding) {
        case StringEncoding::Ascii7: return "ascii7";
        case StringEncoding::Utf8: return "utf8";
        case StringEncoding::Dict: return "dict";
    }
    return "?";
}

bool is_ascii7(std::string_view text) {
    for (unsigned char c : text) {
        if (c > 0x7F) return false;
    }
    return true;
}

bool is_valid_utf8(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        std::uint32_t cp;
        if (lead < 0x80) {
            ++i;
            continue;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1Fu;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0Fu;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07u;
        } else {
            return false;
        }
        if (i + extra >= text.size()) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            const auto c = static_cast<unsigned char>(text[i + k]);
            if ((c & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (c & 0x3Fu);
        }
        static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
        if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += extra + 1;
    }
    return true;
}

StringConstant StringConstant::ascii7(std::string text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c > 0x7F) {
            throw Error(ErrorKind::InvalidArgument,
                        "character at offset " + std::to_string(i) + " is not 7-bit");
        }
        if (c == kEtx) {
            throw Error(ErrorKind::InvalidArgument, "string contains the ETX terminator");
        }
    }
    StringConstant s;
    s.encoding_ = StringEncoding::Ascii7;
    s.text_ = std::move(text);
    return s;
}

StringConstant StringConstant::utf8(std::string text) {
    if (!is_valid_utf8(text)) {
        throw Error(ErrorKind::InvalidArgument, "string is not valid UTF-8");
    }
    if (text.find(kEtx) != std::string::npos) {
        throw Error(ErrorKind::InvalidArgument, "string contains the ETX terminator");
    }
    StringConstant s;
    s.encoding_ = StringEncoding::Utf8;
    s.text_ = std::move(text);
    return s;
}

StringConstant StringConstant::dict(DictScope scope, std::uint64_t index) {
    StringConstant s;
    s.encoding_ = StringEncoding::Dict;
    s.scope_ = scope;
    s.index_ = index;
    return s;
}

StringConstant StringConstant::inline_text(std::string text) {
    return is_ascii7(text) ? ascii7(std::move(text)) : utf8(std::move(text));
}

bool operator==(const StringConstant& a, const StringConstant& b) {
    if (a.encoding_ != b.encoding_) return false;
    if (a.is_dict()) return a.scope_ == b.scope_ && a.index_ == b.index_;
    return a.text_ == b.text_;
}

void encode_text_payload(BitWriter& out, StringEncoding encoding, std::string_view text) {
    switch (encoding) {
        case StringEncoding::Ascii7:
            for (unsigned char c : text) out.write_bits(c, 7);
            out.write_bits(kEtx7, 7);
            return;
        case StringEncoding::Utf8:
            for (unsigned char c : text) out.write_bits(c, 8);
            out.write_bits(kEtx8, 8);
            return;
        case StringEncoding::Dict:
            break;
    }
    throw Error(ErrorKind::InvalidArgument, "DICT strings have no text payload");
}

std::string decode_text_payload(BitReader& in, StringEncoding encoding) {
    const std::size_t start = in.position();
    const unsigned width = encoding == StringEncoding::Ascii7 ? 7 : 8;
    std::string text;
    for (;;) {
        const auto c = static_cast<char>(in.read_bits(width));
        if (c == kEtx) break;
        text.push_back(c);
    }
    if (encoding == StringEncoding::Utf8 && !is_valid_utf8(text)) {
        throw StreamError(ErrorKind::MalformedStream, "invalid UTF-8 string", start);
    }
    return text;
}

void encode_string(BitWriter& out, const StringConstant& value, const DictConfig& dicts) {
    out.write_bits(static_cast<std::uint64_t>(value.encoding()), 2);
    if (!value.is_dict()) {
        encode_text_payload(out, value.encoding(), value.text());
        return;
    }
    if (!dicts.any_enabled()) {
        throw Error(ErrorKind::Encode, "DICT string used while every dictionary is disabled");
    }
    out.append(scope_bits(dicts, value.scope()));
    const std::size_t count = dicts.word_count(value.scope());
    if (value.index() >= count) {
        throw Error(ErrorKind::Encode, std::string("index ") + std::to_string(value.index()) +
                                           " out of range for the " + to_string(value.scope()) +
                                           " dictionary (" + std::to_string(count) + " words)");
    }
    out.write_bits(value.index(), index_width(count));
}

StringConstant decode_string(BitReader& in, const DictConfig& dicts) {
    const std::size_t start = in.position();
    const auto tag = in.read_bits(2);
    switch (tag) {
        case 0b00: return StringConstant::ascii7(decode_text_payload(in, StringEncoding::Ascii7));
        case 0b01: return StringConstant::utf8(decode_text_payload(in, StringEncoding::Utf8));
        case 0b10: {
            const DictScope scope = read_scope(in, dicts);
            const std::size_t count = dicts.word_count(scope);
            if (count == 0) {
                throw StreamError(ErrorKind::MalformedStream,
                                  std::string("DICT string refers to the empty ") +
                                      to_string(scope) + " dictionary",
                                  start);
            }
            const std::uint64_t index = in.read_bits(index_width(count));
            if (index >= count) {
                throw StreamError(ErrorKind::MalformedStream, "DICT index out of range", start);
            }
            return StringConstant::dict(scope, index);
        }
        default:
            throw StreamError(ErrorKind::MalformedStream, "reserved string tag 11", start);
    }
}

std::size_t encoded_string_length(const StringConstant& value, const DictConfig& dicts) {
    BitWriter w;
    encode_string(w, value, dicts);
    return w.size();
}

const char* to_string(NumericKind kind) {
    switch (kind) {
        case NumericKind::Int16: return "INT16";
        case NumericKind::Int32: return "INT32";
        case NumericKind::Fp16: return "FP16";
        case NumericKind::Fp32: return "FP32";
    }
    return "?";
}

unsigned width_of(NumericKind kind) {
    return kind == NumericKind::Int16 || kind == NumericKind::Fp16 ? 16 : 32;
}

NumericConstant NumericConstant::int16(std::int64_t value) {
    if (value < std::numeric_limits<std::int16_t>::min() ||
        value > std::numeric_limits<std::int16_t>::max()) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(value) + " does not fit INT16");
    }
    return {NumericKind::Int16, static_cast<std::uint16_t>(static_cast<std::int16_t>(value))};
}

NumericConstant NumericConstant::int32(std::int64_t value) {
    if (value < std::numeric_limits<std::int32_t>::min() ||
        value > std::numeric_limits<std::int32_t>::max()) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(value) + " does not fit INT32");
    }
    return {NumericKind::Int32, static_cast<std::uint32_t>(static_cast<std::int32_t>(value))};
}

NumericConstant NumericConstant::fp16(double value) {
    return {NumericKind::Fp16, half_from_double(value)};
}

NumericConstant NumericConstant::fp32(float value) {
    return {NumericKind::Fp32, float_bits(value)};
}

NumericConstant NumericConstant::from_bits(NumericKind kind, std::uint32_t bits) {
    if (width_of(kind) == 16 && bits > 0xFFFFu) {
        throw Error(ErrorKind::InvalidArgument, "bit pattern wider than 16 bits");
    }
    return {kind, bits};
}

std::int64_t NumericConstant::int_value() const {
    switch (kind_) {
        case NumericKind::Int16: return static_cast<std::int16_t>(static_cast<std::uint16_t>(bits_));
        case NumericKind::Int32: return static_cast<std::int32_t>(bits_);
        default: break;
    }
    throw Error(ErrorKind::InvalidArgument, "not an integer constant");
}

double NumericConstant::value() const {
    switch (kind_) {
        case NumericKind::Int16:
        case NumericKind::Int32: return static_cast<double>(int_value());
        case NumericKind::Fp16: return half_to_float(static_cast<std::uint16_t>(bits_));
        case NumericKind::Fp32: return float_from_bits(bits_);
    }
    return 0.0;
}

void encode_number(BitWriter& out, const NumericConstant& value) {
    out.write_bits(value.bits(), width_of(value.kind()));
}

NumericConstant decode_number(BitReader& in, NumericKind kind) {
    return NumericConstant::from_bits(kind, static_cast<std::uint32_t>(in.read_bits(width_of(kind))));
}

}  // namespace qrtree
