#include "qrtree/header.hpp"

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

constexpr unsigned kExpBase = 4;
constexpr unsigned kCommandBase = 3;
constexpr unsigned kLanguageBase = 3;

void encode_continuation(BitWriter& out, const std::optional<Continuation>& continuation) {
    out.write_bit(continuation.has_value());
    if (!continuation) return;
    if (continuation->sequence_number >= continuation->sequence_length) {
        throw Error(ErrorKind::InvalidArgument, "sequence number must be below sequence length");
    }
    encode_exp(out, continuation->sequence_number, kExpBase);
    encode_exp(out, continuation->sequence_length, kExpBase);
}

unsigned read_padding(BitReader& in) {
    unsigned zeros = 0;
    while (!in.read_bit()) {
        if (++zeros >= 8) {
            throw StreamError(ErrorKind::MalformedStream, "8 or more padding bits",
                              in.position());
        }
    }
    return zeros;
}

std::optional<Continuation> read_continuation(BitReader& in) {
    if (!in.read_bit()) return std::nullopt;
    const std::size_t at = in.position();
    Continuation c;
    c.sequence_number = decode_exp(in, kExpBase);
    c.sequence_length = decode_exp(in, kExpBase);
    if (c.sequence_number >= c.sequence_length) {
        throw StreamError(ErrorKind::MalformedStream,
                          "sequence number " + std::to_string(c.sequence_number) +
                              " not below sequence length " + std::to_string(c.sequence_length),
                          at);
    }
    return c;
}

unsigned padding_for(std::size_t bits_after_padding) {
    return static_cast<unsigned>((8 - bits_after_padding % 8) % 8);
}

void write_command(BitWriter& out, HeaderCommand command) {
    encode_exp(out, static_cast<std::uint64_t>(command), kCommandBase);
}

}  // namespace

void encode_script_fields(BitWriter& out, const QrscriptHeader& header) {
    if (header.security_profile != kNoSecurity) {
        throw Error(ErrorKind::Unsupported, "security profile " +
                                                std::to_string(header.security_profile) +
                                                " is not supported");
    }
    encode_exp(out, header.security_profile, kExpBase);
    out.write_bit(header.url.has_value());
    if (header.url) {
        if (!is_valid_utf8(*header.url) || header.url->find(kEtx) != std::string::npos) {
            throw Error(ErrorKind::InvalidArgument, "URL must be UTF-8 without ETX");
        }
        encode_text_payload(out, StringEncoding::Utf8, *header.url);
    }
    encode_exp(out, header.dialect, kExpBase);
    encode_exp(out, header.version, kExpBase);
}

void decode_script_fields(BitReader& in, QrscriptHeader& header) {
    std::size_t at = in.position();
    header.security_profile = decode_exp(in, kExpBase);
    if (header.security_profile != kNoSecurity) {
        throw StreamError(ErrorKind::Unsupported,
                          "security profile " + std::to_string(header.security_profile) +
                              " is not supported",
                          at);
    }
    header.url.reset();
    if (in.read_bit()) header.url = decode_text_payload(in, StringEncoding::Utf8);
    at = in.position();
    header.dialect = decode_exp(in, kExpBase);
    if (header.dialect != kDialectQrtree) {
        throw StreamError(ErrorKind::UnknownDialect,
                          "dialect " + std::to_string(header.dialect) + " is not QRtree", at);
    }
    at = in.position();
    header.version = decode_exp(in, kExpBase);
    if (header.version != kFormatVersion) {
        throw StreamError(ErrorKind::Unsupported,
                          "QRtree version " + std::to_string(header.version) +
                              " is not supported",
                          at);
    }
}

BitString encode_qrscript_header(const QrscriptHeader& header, std::size_t payload_bit_length) {
    BitWriter body;
    body.write_bit(true);
    encode_continuation(body, header.continuation);
    encode_script_fields(body, header);

    BitWriter out;
    const unsigned padding = padding_for(body.size() + payload_bit_length);
    for (unsigned i = 0; i < padding; ++i) out.write_bit(false);
    out.append(body.bits());
    return std::move(out).take();
}

QrscriptHeader decode_qrscript_header(BitReader& in) {
    QrscriptHeader header;
    header.padding_bits = read_padding(in);
    header.continuation = read_continuation(in);
    decode_script_fields(in, header);
    return header;
}

std::size_t frame_overhead_bits(const std::optional<Continuation>& continuation) {
    std::size_t bits = 2;  // leading 1 and the continuation flag
    if (continuation) {
        bits += exp_length(continuation->sequence_number, kExpBase) +
                exp_length(continuation->sequence_length, kExpBase);
    }
    return bits;
}

std::vector<std::uint8_t> encode_frame(const std::optional<Continuation>& continuation,
                                       const BitString& payload) {
    BitWriter body;
    body.write_bit(true);
    encode_continuation(body, continuation);
    body.append(payload);

    BitWriter out;
    const unsigned padding = padding_for(body.size());
    for (unsigned i = 0; i < padding; ++i) out.write_bit(false);
    out.append(body.bits());
    return out.bits().bytes();
}

Frame decode_frame(std::span<const std::uint8_t> bytes) {
    BitReader in(bytes, bytes.size() * 8);
    Frame frame;
    frame.padding_bits = read_padding(in);
    frame.continuation = read_continuation(in);
    frame.payload = in.read_slice(in.remaining());
    return frame;
}

BitString encode_qrtree_header(const std::optional<QrtreeHeader>& header) {
    BitWriter out;
    out.write_bit(header.has_value());
    if (!header) return std::move(out).take();

    if (header->int_width) {
        write_command(out, HeaderCommand::IntType);
        out.write_bit(*header->int_width == IntWidth::Int32);
    }
    if (header->float_width) {
        write_command(out, HeaderCommand::FloatType);
        out.write_bit(*header->float_width == FloatWidth::Fp32);
    }
    // Pair 11 restates the default, so it is never written.
    if (header->dict_types && !(header->dict_types->global && header->dict_types->specific)) {
        write_command(out, HeaderCommand::DictTypes);
        out.write_bit(header->dict_types->global);
        out.write_bit(header->dict_types->specific);
    }
    for (std::uint64_t index : header->spec_indices) {
        write_command(out, HeaderCommand::DictSpecType);
        encode_exp(out, index, kExpBase);
    }
    for (const auto& local : header->local_dicts) {
        write_command(out, HeaderCommand::DictLocal);
        encode_exp(out, local.language, kLanguageBase);
        encode_exp(out, local.words.size(), kExpBase);
        for (const auto& word : local.words) {
            if (word.is_dict()) {
                throw Error(ErrorKind::Encode, "local dictionary words must be inline text");
            }
            out.write_bit(word.encoding() == StringEncoding::Utf8);
            encode_text_payload(out, word.encoding(), word.text());
        }
    }
    for (const auto& payload : header->user_def_payloads) {
        write_command(out, HeaderCommand::UserDef);
        out.append(payload);
    }
    write_command(out, HeaderCommand::HeaderEnd);
    return std::move(out).take();
}

std::optional<QrtreeHeader> decode_qrtree_header(BitReader& in, const UserDefHandler& user_def) {
    if (!in.read_bit()) return std::nullopt;
    QrtreeHeader header;
    for (;;) {
        const std::size_t at = in.position();
        const std::uint64_t code = decode_exp(in, kCommandBase);
        switch (code) {
            case static_cast<std::uint64_t>(HeaderCommand::HeaderEnd):
                return header;
            case static_cast<std::uint64_t>(HeaderCommand::IntType):
                header.int_width = in.read_bit() ? IntWidth::Int32 : IntWidth::Int16;
                break;
            case static_cast<std::uint64_t>(HeaderCommand::FloatType):
                header.float_width = in.read_bit() ? FloatWidth::Fp32 : FloatWidth::Fp16;
                break;
            case static_cast<std::uint64_t>(HeaderCommand::DictTypes): {
                DictTypes types;
                types.global = in.read_bit();
                types.specific = in.read_bit();
                header.dict_types = types;
                break;
            }
            case static_cast<std::uint64_t>(HeaderCommand::DictSpecType):
                header.spec_indices.push_back(decode_exp(in, kExpBase));
                break;
            case static_cast<std::uint64_t>(HeaderCommand::DictLocal): {
                LocalDictionary local;
                local.language = decode_exp(in, kLanguageBase);
                const std::uint64_t count = decode_exp(in, kExpBase);
                for (std::uint64_t i = 0; i < count; ++i) {
                    const bool utf8 = in.read_bit();
                    std::string text =
                        decode_text_payload(in, utf8 ? StringEncoding::Utf8 : StringEncoding::Ascii7);
                    local.words.push_back(utf8 ? StringConstant::utf8(std::move(text))
                                               : StringConstant::ascii7(std::move(text)));
                }
                header.local_dicts.push_back(std::move(local));
                break;
            }
            case static_cast<std::uint64_t>(HeaderCommand::UserDef): {
                if (!user_def) {
                    throw StreamError(ErrorKind::Unsupported, "USER_DEF header command", at);
                }
                const std::size_t length = user_def(in);
                header.user_def_payloads.push_back(in.read_slice(length));
                break;
            }
            default:
                throw StreamError(ErrorKind::Unsupported,
                                  "extended header command " + std::to_string(code), at);
        }
    }
}

DictConfig make_dict_config(const DictionaryStore& store, const std::optional<QrtreeHeader>& tree) {
    DictConfig config;
    config.global = store.global;
    config.default_language = store.default_language;
    config.active_language = store.active_language;
    config.local_languages = store.local_languages;
    if (!tree) return config;

    if (tree->dict_types) {
        config.global_enabled = tree->dict_types->global;
        config.spec_enabled = tree->dict_types->specific;
    }
    for (std::uint64_t index : tree->spec_indices) {
        if (index >= store.specific.size()) {
            throw Error(ErrorKind::InvalidArgument,
                        "specific dictionary " + std::to_string(index) + " is not loaded (" +
                            std::to_string(store.specific.size()) + " available)");
        }
        config.specific_order.push_back(store.specific[index]);
    }
    for (const auto& local : tree->local_dicts) {
        auto& words = config.locals[local.language];
        for (const auto& word : local.words) words.push_back(word.text());
    }
    config.local_enabled = !tree->local_dicts.empty();
    return config;
}

}  // namespace qrtree
