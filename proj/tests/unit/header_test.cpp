#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qrtree/error.hpp"
#include "qrtree/header.hpp"

using namespace qrtree;

namespace {

std::optional<QrtreeHeader> decode_tree(const std::string& bits, const UserDefHandler& h = {}) {
    const BitString s = BitString::from_string(bits);
    BitReader r(s);
    auto out = decode_qrtree_header(r, h);
    EXPECT_TRUE(r.at_end());
    return out;
}

ErrorKind decode_tree_error(const std::string& bits) {
    try {
        decode_tree(bits);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

QrscriptHeader decode_script(const std::string& bits) {
    const BitString s = BitString::from_string(bits);
    BitReader r(s);
    return decode_qrscript_header(r);
}

ErrorKind decode_script_error(const std::string& bits) {
    try {
        decode_script(bits);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

}  // namespace

TEST(ScriptHeader, PlainProgramLayout) {
    // 15 marker-to-version bits and a 7-bit payload need two zeros of padding.
    const BitString bits = encode_qrscript_header({}, 7);
    EXPECT_EQ(bits.to_string(), oracle::strip("001 0 0000 0 0000 0001"));
}

TEST(ScriptHeader, NoPaddingStartsWithOne) {
    // 15 marker-to-version bits plus 1 payload bit is a whole number of bytes.
    const BitString bits = encode_qrscript_header({}, 1);
    EXPECT_EQ(bits.to_string(), oracle::strip("1 0 0000 0 0000 0001"));
}

TEST(ScriptHeader, ContinuationField) {
    QrscriptHeader h;
    h.continuation = Continuation{1, 3};
    const std::string bits = encode_qrscript_header(h, 0).to_string();
    const std::string body = oracle::strip("1 1 0001 0011 0000 0 0000 0001");
    ASSERT_GE(bits.size(), body.size());
    EXPECT_EQ(bits.substr(bits.size() - body.size()), body);
    EXPECT_EQ(bits.size() % 8, 0u);
    QrscriptHeader bad;
    bad.continuation = Continuation{3, 3};
    EXPECT_THROW(encode_qrscript_header(bad, 0), Error);
}

TEST(ScriptHeader, DecodeExample) {
    const QrscriptHeader h = decode_script(oracle::strip("001 0 0000 0 0000 0001"));
    EXPECT_EQ(h.padding_bits, 2u);
    EXPECT_FALSE(h.continuation);
    EXPECT_EQ(h.security_profile, 0u);
    EXPECT_FALSE(h.url);
    EXPECT_EQ(h.dialect, 0u);
    EXPECT_EQ(h.version, 1u);
}

TEST(ScriptHeader, DecodeErrors) {
    EXPECT_EQ(decode_script_error("00000000 1"), ErrorKind::MalformedStream);
    EXPECT_EQ(decode_script_error(oracle::strip("1 0 0001 0 0000 0001")), ErrorKind::Unsupported);
    EXPECT_EQ(decode_script_error(oracle::strip("1 0 0000 0 0001 0001")), ErrorKind::UnknownDialect);
    EXPECT_EQ(decode_script_error(oracle::strip("1 0 0000 0 0000 0010")), ErrorKind::Unsupported);
    EXPECT_EQ(decode_script_error(oracle::strip("1 0 0000 0 0000")), ErrorKind::EndOfStream);
    EXPECT_EQ(decode_script_error(oracle::strip("1 1 0011 0011")), ErrorKind::MalformedStream);
}

TEST(ScriptHeader, EncodeRejectsSecurityAndBadUrl) {
    QrscriptHeader h;
    h.security_profile = 1;
    EXPECT_THROW(encode_qrscript_header(h, 0), Error);
    QrscriptHeader u;
    u.url = std::string("http://a\x03");
    EXPECT_THROW(encode_qrscript_header(u, 0), Error);
}

TEST(ScriptHeader, UrlField) {
    QrscriptHeader h;
    h.url = "https://example.org/\xC3\xA8";
    const BitString bits = encode_qrscript_header(h, 3);
    BitWriter w;
    w.append(bits);
    w.write_bits(0, 3);
    EXPECT_EQ(w.size() % 8, 0u);
    BitReader r(w.bits());
    const QrscriptHeader back = decode_qrscript_header(r);
    EXPECT_EQ(back.url, h.url);
    EXPECT_EQ(r.remaining(), 3u);
}

TEST(ScriptHeader, RandomRoundTripAndByteAlignment) {
    std::mt19937 rng(21);
    for (int i = 0; i < 2000; ++i) {
        QrscriptHeader h;
        if (rng() & 1) {
            const std::uint64_t total = 1 + rng() % 300;
            h.continuation = Continuation{rng() % total, total};
        }
        if (rng() % 4 == 0) h.url = "u" + std::to_string(rng());
        const std::size_t payload = rng() % 64;
        BitWriter w;
        w.append(encode_qrscript_header(h, payload));
        for (std::size_t k = 0; k < payload; ++k) w.write_bit(rng() & 1);
        ASSERT_EQ(w.size() % 8, 0u);
        BitReader r(w.bits());
        const QrscriptHeader back = decode_qrscript_header(r);
        ASSERT_LT(back.padding_bits, 8u);
        ASSERT_EQ(back.continuation.has_value(), h.continuation.has_value());
        if (h.continuation) {
            ASSERT_EQ(back.continuation->sequence_number, h.continuation->sequence_number);
            ASSERT_EQ(back.continuation->sequence_length, h.continuation->sequence_length);
        }
        ASSERT_EQ(back.url, h.url);
        ASSERT_EQ(r.remaining(), payload);
    }
}

TEST(TreeHeader, Examples) {
    EXPECT_EQ(encode_qrtree_header(std::nullopt).to_string(), "0");
    QrtreeHeader int32;
    int32.int_width = IntWidth::Int32;
    EXPECT_EQ(encode_qrtree_header(int32).to_string(), oracle::strip("1 001 1 000"));
    QrtreeHeader global_only;
    global_only.dict_types = DictTypes{true, false};
    EXPECT_EQ(encode_qrtree_header(global_only).to_string(), oracle::strip("1 011 10 000"));
}

TEST(TreeHeader, DictTypesPairs) {
    const std::pair<DictTypes, std::string> rows[] = {
        {{false, false}, "1 011 00 000"},
        {{false, true}, "1 011 01 000"},
        {{true, false}, "1 011 10 000"},
        {{true, true}, "1 000"},  // the default is never written out
    };
    for (const auto& [types, bits] : rows) {
        QrtreeHeader h;
        h.dict_types = types;
        EXPECT_EQ(encode_qrtree_header(h).to_string(), oracle::strip(bits));
        const auto back = decode_tree(oracle::strip(bits));
        ASSERT_TRUE(back);
        const DictTypes got = back->dict_types.value_or(DictTypes{});
        EXPECT_EQ(got.global, types.global);
        EXPECT_EQ(got.specific, types.specific);
    }
}

TEST(TreeHeader, DecodeExamples) {
    EXPECT_FALSE(decode_tree("0"));
    const auto fp16 = decode_tree(oracle::strip("1 010 0 000"));
    ASSERT_TRUE(fp16);
    EXPECT_EQ(fp16->float_width, FloatWidth::Fp16);
    EXPECT_FALSE(fp16->int_width);

    const std::string local = "1 101 000 0010 0" + oracle::ascii7_payload("Si") + "0" +
                              oracle::ascii7_payload("No") + "000";
    const auto dict = decode_tree(oracle::strip(local));
    ASSERT_TRUE(dict);
    ASSERT_EQ(dict->local_dicts.size(), 1u);
    EXPECT_EQ(dict->local_dicts[0].language, 0u);
    EXPECT_EQ(dict->local_dicts[0].words,
              (std::vector<StringConstant>{StringConstant::ascii7("Si"), StringConstant::ascii7("No")}));
    EXPECT_EQ(encode_qrtree_header(*dict).to_string(), oracle::strip(local));
}

TEST(TreeHeader, RepeatedCommandsAccumulate) {
    QrtreeHeader h;
    h.spec_indices = {2, 0, 17};
    h.local_dicts = {{0, {StringConstant::ascii7("Yes")}},
                     {1, {StringConstant::utf8("S\xC3\xAC")}},
                     {9, {StringConstant::ascii7("")}}};
    const auto back = decode_tree(encode_qrtree_header(h).to_string());
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, h);
}

TEST(TreeHeader, DecodeErrors) {
    EXPECT_EQ(decode_tree_error(oracle::strip("1 111 000")), ErrorKind::Unsupported);
    EXPECT_EQ(decode_tree_error(oracle::strip("1 001 1")), ErrorKind::EndOfStream);
    EXPECT_EQ(decode_tree_error(oracle::strip("1 110 000")), ErrorKind::Unsupported);
}

TEST(TreeHeader, UserDefHandlerReportsLength) {
    const UserDefHandler handler = [](const BitReader&) -> std::size_t { return 5; };
    const auto h = decode_tree(oracle::strip("1 110 10110 001 0 000"), handler);
    ASSERT_TRUE(h);
    ASSERT_EQ(h->user_def_payloads.size(), 1u);
    EXPECT_EQ(h->user_def_payloads[0].to_string(), "10110");
    EXPECT_EQ(h->int_width, IntWidth::Int16);
    EXPECT_EQ(encode_qrtree_header(*h).to_string(), oracle::strip("1 001 0 110 10110 000"));
}

TEST(TreeHeader, RandomRoundTrip) {
    std::mt19937 rng(31);
    for (int i = 0; i < 2000; ++i) {
        QrtreeHeader h;
        if (rng() & 1) h.int_width = (rng() & 1) ? IntWidth::Int32 : IntWidth::Int16;
        if (rng() & 1) h.float_width = (rng() & 1) ? FloatWidth::Fp32 : FloatWidth::Fp16;
        if (rng() & 1) h.dict_types = DictTypes{static_cast<bool>(rng() & 1), false};
        for (unsigned k = rng() % 3; k > 0; --k) h.spec_indices.push_back(rng() % 40);
        for (unsigned k = rng() % 3; k > 0; --k) {
            LocalDictionary d;
            d.language = rng() % 12;
            for (unsigned w = rng() % 4; w > 0; --w) {
                d.words.push_back((rng() & 1) ? StringConstant::ascii7("w" + std::to_string(rng() % 99))
                                              : StringConstant::utf8("\xC3\xA9" + std::to_string(w)));
            }
            h.local_dicts.push_back(d);
        }
        const auto back = decode_tree(encode_qrtree_header(h).to_string());
        ASSERT_TRUE(back);
        ASSERT_EQ(*back, h);
    }
}

TEST(Frame, PayloadAndContinuationSurvive) {
    const BitString payload = BitString::from_string("1011001110001");
    const auto bytes = encode_frame(Continuation{0, 2}, payload);
    const Frame f = decode_frame(bytes);
    ASSERT_TRUE(f.continuation);
    EXPECT_EQ(f.continuation->sequence_length, 2u);
    EXPECT_EQ(f.payload, payload);
    EXPECT_EQ(frame_overhead_bits(std::nullopt), 2u);
    EXPECT_EQ(frame_overhead_bits(Continuation{0, 2}), 10u);
}

TEST(DictConfigFromHeader, ScopesFollowCommands) {
    DictionaryStore store;
    store.specific = {{{"en", {"a", "b", "c"}}}};
    const DictConfig none = make_dict_config(store, std::nullopt);
    EXPECT_TRUE(none.global_enabled);
    EXPECT_TRUE(none.spec_enabled);
    EXPECT_FALSE(none.local_enabled);

    QrtreeHeader h;
    h.dict_types = DictTypes{false, true};
    h.spec_indices = {0};
    h.local_dicts = {{0, {StringConstant::ascii7("x")}}};
    const DictConfig c = make_dict_config(store, h);
    EXPECT_FALSE(c.global_enabled);
    EXPECT_TRUE(c.local_enabled);
    EXPECT_EQ(c.word_count(DictScope::Specific), 3u);

    h.spec_indices = {1};
    EXPECT_THROW(make_dict_config(store, h), Error);
}
