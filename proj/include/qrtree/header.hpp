#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrtree/bitstream.hpp"
#include "qrtree/datatypes.hpp"
#include "qrtree/dictionary.hpp"

namespace qrtree {

inline constexpr std::uint64_t kDialectQrtree = 0;
inline constexpr std::uint64_t kFormatVersion = 1;
inline constexpr std::uint64_t kNoSecurity = 0;

struct Continuation {
    std::uint64_t sequence_number = 0;  // 0 .. sequence_length - 1
    std::uint64_t sequence_length = 1;  // total number of codes

    friend bool operator==(const Continuation&, const Continuation&) = default;
};

struct QrscriptHeader {
    unsigned padding_bits = 0;  // derived from the stream length when encoding
    std::optional<Continuation> continuation;
    std::uint64_t security_profile = kNoSecurity;
    std::optional<std::string> url;
    std::uint64_t dialect = kDialectQrtree;
    std::uint64_t version = kFormatVersion;

    // Padding is a by-product of the payload length and does not take part.
    friend bool operator==(const QrscriptHeader& a, const QrscriptHeader& b) {
        return a.continuation == b.continuation && a.security_profile == b.security_profile &&
               a.url == b.url && a.dialect == b.dialect && a.version == b.version;
    }
};

enum class IntWidth { Int16 = 0, Int32 = 1 };
enum class FloatWidth { Fp16 = 0, Fp32 = 1 };

struct DictTypes {
    bool global = true;
    bool specific = true;

    friend bool operator==(const DictTypes&, const DictTypes&) = default;
};

struct LocalDictionary {
    std::uint64_t language = 0;  // 0 is the default language
    std::vector<StringConstant> words;  // ASCII-7 or UTF-8 only

    friend bool operator==(const LocalDictionary&, const LocalDictionary&) = default;
};

enum class HeaderCommand : std::uint64_t {
    HeaderEnd = 0b000,
    IntType = 0b001,
    FloatType = 0b010,
    DictTypes = 0b011,
    DictSpecType = 0b100,
    DictLocal = 0b101,
    UserDef = 0b110,
};

struct QrtreeHeader {
    std::optional<IntWidth> int_width;
    std::optional<FloatWidth> float_width;
    std::optional<DictTypes> dict_types;  // absent: global and specific enabled
    std::vector<std::uint64_t> spec_indices;
    std::vector<LocalDictionary> local_dicts;
    std::vector<BitString> user_def_payloads;

    friend bool operator==(const QrtreeHeader&, const QrtreeHeader&) = default;
};

struct HeaderSet {
    QrscriptHeader script;
    std::optional<QrtreeHeader> tree;

    friend bool operator==(const HeaderSet&, const HeaderSet&) = default;
};

// Given the bits at the start of a USER_DEF payload, returns how many bits the
// payload spans. The default (empty) handler rejects USER_DEF as unsupported.
using UserDefHandler = std::function<std::size_t(const BitReader& at_payload)>;

// Padding zeros, the leading 1, and every QRscript field, sized so that header plus
// `payload_bit_length` following bits is a whole number of bytes.
BitString encode_qrscript_header(const QrscriptHeader& header, std::size_t payload_bit_length);
QrscriptHeader decode_qrscript_header(BitReader& in);

// Fields after the continuation field: security profile, URL, dialect and version.
void encode_script_fields(BitWriter& out, const QrscriptHeader& header);
void decode_script_fields(BitReader& in, QrscriptHeader& header);

// A physical code: padding + marker + continuation field, then the payload bits.
struct Frame {
    unsigned padding_bits = 0;
    std::optional<Continuation> continuation;
    BitString payload;
};

std::size_t frame_overhead_bits(const std::optional<Continuation>& continuation);
std::vector<std::uint8_t> encode_frame(const std::optional<Continuation>& continuation,
                                       const BitString& payload);
Frame decode_frame(std::span<const std::uint8_t> bytes);

BitString encode_qrtree_header(const std::optional<QrtreeHeader>& header);
std::optional<QrtreeHeader> decode_qrtree_header(BitReader& in,
                                                 const UserDefHandler& user_def = {});

// Dictionary state implied by the QRtree header for the given application store.
DictConfig make_dict_config(const DictionaryStore& store, const std::optional<QrtreeHeader>& tree);

}  // namespace qrtree
