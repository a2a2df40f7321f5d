#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "qrtree/bitstream.hpp"
#include "qrtree/error.hpp"

using namespace qrtree;

namespace {

std::string exp_bits(std::uint64_t value, unsigned n0) { return encode_exp(value, n0).to_string(); }

std::uint64_t decode_bits(const std::string& bits, unsigned n0, std::size_t* consumed = nullptr) {
    const BitString s = BitString::from_string(bits);
    BitReader r(s);
    const std::uint64_t v = decode_exp(r, n0);
    if (consumed) *consumed = r.position();
    return v;
}

}  // namespace

TEST(ExpEncoding, TableVectors) {
    EXPECT_EQ(exp_bits(12, 4), "1100");
    EXPECT_EQ(exp_bits(14, 4), "1110");
    EXPECT_EQ(exp_bits(15, 4), oracle::strip("1111 0000"));
    EXPECT_EQ(exp_bits(120, 4), oracle::strip("1111 1111 01011010"));
    EXPECT_EQ(exp_bits(300, 4), oracle::strip("1111 1111 11111111 0000000000001111"));
}

TEST(ExpEncoding, DecodeTableVectors) {
    std::size_t used = 0;
    EXPECT_EQ(decode_bits("1110", 4, &used), 14u);
    EXPECT_EQ(used, 4u);
    EXPECT_EQ(decode_bits("11110000", 4, &used), 15u);
    EXPECT_EQ(used, 8u);
    EXPECT_EQ(decode_bits(oracle::strip("1111 1111 11111111 0000000000001111"), 4, &used), 300u);
    EXPECT_EQ(used, 32u);
}

TEST(ExpEncoding, SmallValuesAgreeWithOracle) {
    for (unsigned n0 : {1u, 2u, 3u, 4u, 5u, 8u}) {
        for (std::uint64_t v = 0; v < 5000; ++v) {
            const std::string expected = oracle::exp_code(v, n0);
            ASSERT_EQ(exp_bits(v, n0), expected) << v << " n0=" << n0;
            ASSERT_EQ(exp_length(v, n0), expected.size());
            std::size_t used = 0;
            ASSERT_EQ(decode_bits(expected, n0, &used), v);
            ASSERT_EQ(used, expected.size());
        }
    }
}

TEST(ExpEncoding, RandomRoundTripAgainstOracle) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t v = rng() >> (rng() % 64);
        const std::string expected = oracle::exp_code(v, 4);
        ASSERT_EQ(exp_bits(v, 4), expected) << v;
        ASSERT_EQ(decode_bits(expected, 4), v);
    }
}

TEST(ExpEncoding, Extremes) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    for (unsigned n0 : {3u, 4u}) {
        const std::string bits = exp_bits(max, n0);
        EXPECT_EQ(bits, oracle::exp_code(max, n0));
        EXPECT_EQ(decode_bits(bits, n0), max);
    }
}

TEST(ExpEncoding, SaturatedChunkNeverEnds) {
    // The terminating chunk is never all ones: 2^w - 1 spills into a zero chunk.
    EXPECT_EQ(exp_bits(7, 3), "111000");
    EXPECT_EQ(exp_bits(6, 3), "110");
}

TEST(ExpEncoding, TruncatedStreamFails) {
    const BitString s = BitString::from_string("1111 11");
    BitReader r(s);
    try {
        decode_exp(r, 4);
        FAIL();
    } catch (const StreamError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EndOfStream);
    }
}

TEST(BitString, WriterReaderRoundTrip) {
    BitWriter w;
    w.write_bits(0b101, 3);
    w.write_bit(true);
    w.write_bits(0xDEADBEEFCAFEULL, 48);
    w.write_bits(0, 0);
    EXPECT_EQ(w.size(), 52u);
    const BitString s = w.bits();
    EXPECT_EQ(s.bytes().size(), 7u);
    EXPECT_EQ(s.bytes().back() & 0x0F, 0);  // unused tail bits stay zero
    BitReader r(s);
    EXPECT_EQ(r.read_bits(3), 0b101u);
    EXPECT_TRUE(r.read_bit());
    EXPECT_EQ(r.read_bits(48), 0xDEADBEEFCAFEULL);
    EXPECT_TRUE(r.at_end());
    EXPECT_THROW(r.read_bit(), StreamError);
}

TEST(BitString, MsbFirstByteLayout) {
    const BitString s = BitString::from_string("1000 0001 1");
    ASSERT_EQ(s.bytes().size(), 2u);
    EXPECT_EQ(s.bytes()[0], 0x81);
    EXPECT_EQ(s.bytes()[1], 0x80);
    EXPECT_EQ(s.to_string(), "100000011");
}

TEST(BitString, SliceAndAppend) {
    const BitString s = BitString::from_string("110100111000101");
    EXPECT_EQ(s.slice(3, 7).to_string(), "1001110");
    BitWriter w;
    w.append(s.slice(0, 5));
    w.append(s.slice(5, 10));
    EXPECT_EQ(w.bits(), s);
}

TEST(BitString, WriteRejectsOverwideValues) {
    BitWriter w;
    EXPECT_THROW(w.write_bits(4, 2), Error);
    EXPECT_THROW(w.write_bits(0, 65), Error);
}
