#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <random>

#include "oracles.hpp"
#include "qrtree/datatypes.hpp"
#include "qrtree/error.hpp"
#include "qrtree/float16.hpp"

using namespace qrtree;

namespace {

DictConfig default_dicts() {
    DictConfig c;
    c.global = {{"en", {"Yes", "No", "Cancel", "Ok"}}};
    c.default_language = "en";
    return c;
}

std::string string_bits(const StringConstant& s, const DictConfig& dicts = {}) {
    BitWriter w;
    encode_string(w, s, dicts);
    return w.bits().to_string();
}

std::string number_bits(const NumericConstant& n) {
    BitWriter w;
    encode_number(w, n);
    return w.bits().to_string();
}

StringConstant decode_from(const std::string& bits, const DictConfig& dicts = {}) {
    const BitString s = BitString::from_string(bits);
    BitReader r(s);
    StringConstant out = decode_string(r, dicts);
    EXPECT_TRUE(r.at_end());
    return out;
}

}  // namespace

TEST(Float16, ExhaustiveAgainstFieldOracle) {
    for (std::uint32_t h = 0; h <= 0xFFFF; ++h) {
        const auto half = static_cast<std::uint16_t>(h);
        const double expected = oracle::half_value(half);
        const float got = half_to_float(half);
        if (std::isnan(expected)) {
            ASSERT_TRUE(std::isnan(got)) << h;
        } else {
            ASSERT_EQ(static_cast<double>(got), expected) << h;
            ASSERT_EQ(std::signbit(got), std::signbit(expected)) << h;
        }
    }
}

TEST(Float16, ExhaustiveBitExactRoundTrip) {
    for (std::uint32_t h = 0; h <= 0xFFFF; ++h) {
        const auto half = static_cast<std::uint16_t>(h);
        ASSERT_EQ(half_from_float(half_to_float(half)), half) << h;
        const auto c = NumericConstant::from_bits(NumericKind::Fp16, half);
        BitWriter w;
        encode_number(w, c);
        BitReader r(w.bits());
        ASSERT_EQ(decode_number(r, NumericKind::Fp16), c);
    }
}

TEST(Float16, RoundingMatchesBruteForceNearest) {
    const oracle::HalfRounder rounder;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mantissa(0.5, 1.0);
    std::uniform_int_distribution<int> exponent(-28, 18);
    for (int i = 0; i < 100000; ++i) {
        double x = std::ldexp(mantissa(rng), exponent(rng));
        if (rng() & 1) x = -x;
        ASSERT_EQ(half_from_double(x), rounder.round(x)) << x;
    }
    // Exact midpoints between neighbours exercise ties-to-even.
    for (std::uint16_t h = 0; h < 0x7BFF; h += 37) {
        const double mid = (oracle::half_value(h) + oracle::half_value(h + 1)) / 2;
        ASSERT_EQ(half_from_double(mid), rounder.round(mid)) << h;
    }
    EXPECT_EQ(half_from_double(65519.0), 0x7BFF);
    EXPECT_EQ(half_from_double(65520.0), 0x7C00);
}

TEST(Float16, NaNPayloadKept) {
    EXPECT_EQ(half_from_float(half_to_float(0x7E01)), 0x7E01);
    EXPECT_EQ(half_from_float(half_to_float(0xFD55)), 0xFD55);
}

TEST(Float32, RandomPatternsBitExact) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100000; ++i) {
        const std::uint32_t bits = rng();
        const auto c = NumericConstant::from_bits(NumericKind::Fp32, bits);
        BitWriter w;
        encode_number(w, c);
        ASSERT_EQ(w.bits().to_string(), oracle::binary(bits, 32));
        BitReader r(w.bits());
        ASSERT_EQ(decode_number(r, NumericKind::Fp32).bits(), bits);
    }
}

TEST(Numbers, Examples) {
    EXPECT_EQ(number_bits(NumericConstant::int16(5)), "0000000000000101");
    EXPECT_EQ(number_bits(NumericConstant::int16(-1)), "1111111111111111");
    EXPECT_EQ(number_bits(NumericConstant::fp16(1.0)), oracle::strip("0 01111 0000000000"));
    EXPECT_EQ(number_bits(NumericConstant::fp32(-2.5f)),
              oracle::strip("1 10000000 01000000000000000000000"));
    EXPECT_EQ(number_bits(NumericConstant::int32(-2)), std::string(31, '1') + "0");
}

TEST(Numbers, DecodeExamples) {
    const BitString zero = BitString::from_string(std::string(16, '0'));
    BitReader r(zero);
    const auto z = decode_number(r, NumericKind::Fp16);
    EXPECT_EQ(z.value(), 0.0);
    EXPECT_FALSE(std::signbit(z.value()));

    const BitString min = BitString::from_string("1000000000000000");
    BitReader r2(min);
    EXPECT_EQ(decode_number(r2, NumericKind::Int16).int_value(), -32768);
}

TEST(Numbers, RangeChecks) {
    EXPECT_THROW(NumericConstant::int16(32768), Error);
    EXPECT_THROW(NumericConstant::int16(-32769), Error);
    EXPECT_NO_THROW(NumericConstant::int16(-32768));
    EXPECT_THROW(NumericConstant::int32(2147483648LL), Error);
    EXPECT_NO_THROW(NumericConstant::int32(-2147483648LL));
}

TEST(Numbers, RandomIntegerRoundTrip) {
    std::mt19937 rng(3);
    for (int i = 0; i < 20000; ++i) {
        const auto v32 = static_cast<std::int32_t>(rng());
        const auto v16 = static_cast<std::int16_t>(rng());
        for (const auto& c : {NumericConstant::int32(v32), NumericConstant::int16(v16)}) {
            BitWriter w;
            encode_number(w, c);
            ASSERT_EQ(w.size(), width_of(c.kind()));
            BitReader r(w.bits());
            ASSERT_EQ(decode_number(r, c.kind()), c);
        }
    }
}

TEST(Strings, Examples) {
    EXPECT_EQ(string_bits(StringConstant::ascii7("")), "000000011");
    EXPECT_EQ(string_bits(StringConstant::ascii7("A")), oracle::strip("00 1000001 0000011"));
    EXPECT_EQ(string_bits(StringConstant::utf8("Si")), "01" + oracle::utf8_payload("Si"));
    EXPECT_EQ(string_bits(StringConstant::dict(DictScope::Global, 0), default_dicts()), "10" "0" "00");
}

TEST(Strings, DecodeExamples) {
    EXPECT_EQ(decode_from("000000011"), StringConstant::ascii7(""));
    EXPECT_EQ(decode_from("01" + oracle::utf8_payload("Si")), StringConstant::utf8("Si"));
    const DictConfig dicts = default_dicts();
    EXPECT_EQ(decode_from("10" "0" "11", dicts), StringConstant::dict(DictScope::Global, 3));
    try {
        decode_from("11" "0000011");
        FAIL();
    } catch (const StreamError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MalformedStream);
    }
}

TEST(Strings, Ascii7Length) {
    for (std::size_t n = 0; n < 40; ++n) {
        const auto s = StringConstant::ascii7(std::string(n, 'q'));
        EXPECT_EQ(encoded_string_length(s, {}), 2 + 7 * (n + 1));
        EXPECT_EQ(string_bits(s), "00" + oracle::ascii7_payload(std::string(n, 'q')));
    }
}

TEST(Strings, Utf8MatchesByteOracle) {
    const std::string text = "Perch\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x98\x80";
    EXPECT_EQ(string_bits(StringConstant::utf8(text)), "01" + oracle::utf8_payload(text));
    EXPECT_EQ(decode_from("01" + oracle::utf8_payload(text)).text(), text);
}

TEST(Strings, ConstructionErrors) {
    EXPECT_THROW(StringConstant::ascii7("caf\xC3\xA9"), Error);
    EXPECT_THROW(StringConstant::ascii7(std::string("a\x03")), Error);
    EXPECT_THROW(StringConstant::utf8(std::string("a\x03")), Error);
    EXPECT_THROW(StringConstant::utf8("\xC3"), Error);
    EXPECT_EQ(StringConstant::inline_text("abc").encoding(), StringEncoding::Ascii7);
    EXPECT_EQ(StringConstant::inline_text("\xC3\xA8").encoding(), StringEncoding::Utf8);
}

TEST(Strings, InvalidUtf8InStreamRejected) {
    EXPECT_THROW(decode_from("01" "11000011" "00000011"), StreamError);
    EXPECT_THROW(decode_from("01" "11111111" "00000011"), StreamError);
}

TEST(Strings, MissingTerminatorIsEndOfStream) {
    try {
        decode_from("00" "1000001");
        FAIL();
    } catch (const StreamError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EndOfStream);
    }
}

TEST(Strings, DisabledScopeIsEncodeError) {
    DictConfig none;
    none.global_enabled = false;
    none.spec_enabled = false;
    EXPECT_THROW(string_bits(StringConstant::dict(DictScope::Global, 0), none), Error);
    EXPECT_THROW(string_bits(StringConstant::dict(DictScope::Global, 9), default_dicts()), Error);
}

TEST(Strings, RandomRoundTrip) {
    std::mt19937 rng(9);
    for (int i = 0; i < 3000; ++i) {
        std::string text;
        const int n = static_cast<int>(rng() % 30);
        const bool ascii = rng() & 1;
        for (int k = 0; k < n; ++k) {
            char c;
            do {
                c = static_cast<char>(rng() % 128);
            } while (c == '\x03');
            text.push_back(c);
        }
        if (!ascii) text += "\xC3\xA0";
        const auto s = ascii ? StringConstant::ascii7(text) : StringConstant::utf8(text);
        const std::string bits = string_bits(s);
        ASSERT_EQ(bits.size(), encoded_string_length(s, {}));
        ASSERT_EQ(decode_from(bits), s);
    }
}
