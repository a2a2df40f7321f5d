#include <gtest/gtest.h>

#include <set>

#include "../support/program_gen.hpp"
#include "oracles.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"

using namespace qrtree;

namespace {

std::string bits_of(const Instruction& i, const HeaderSet& h = {}, const DictConfig& d = {}) {
    return encode_instruction(i, h, d).to_string();
}

Instruction decode_one(const std::string& bits, const HeaderSet& h = {}, const DictConfig& d = {}) {
    const BitString s = BitString::from_string(bits);
    BitReader r(s);
    Instruction out = decode_instruction(r, h, d);
    EXPECT_TRUE(r.at_end());
    return out;
}

ErrorKind decode_error(const std::string& bits) {
    try {
        decode_one(bits);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

Program appendix_b() { return assemble(oracle::read_file(fixture("appendix_b.qrt"))); }

HeaderSet with_tree(QrtreeHeader tree) {
    HeaderSet h;
    h.tree = std::move(tree);
    return h;
}

}  // namespace

TEST(Instructions, Examples) {
    EXPECT_EQ(bits_of(Instruction::go_to(0)), "1000000");
    EXPECT_EQ(bits_of(Instruction::printex(StringConstant::ascii7(""))), oracle::strip("011 0 00 0000011"));
    EXPECT_EQ(bits_of(Instruction::ifc(RelOp::Le, NumericConstant::int16(5), 4)),
              oracle::strip("110 010 00 0000000000000101 0100"));
    EXPECT_EQ(bits_of(Instruction::print(Reference{1})), oracle::strip("010 1 0001"));
    EXPECT_EQ(bits_of(Instruction::if_equal(StringConstant::ascii7("Yes"), 2)),
              "101" "0" "00" + oracle::ascii7_payload("Yes") + "0010");
    EXPECT_EQ(bits_of(Instruction::inputs(Reference{15})), oracle::strip("001 1 1111 0000"));
    EXPECT_EQ(bits_of(Instruction::input(StringConstant::utf8("Q"))),
              "000" "0" "01" + oracle::utf8_payload("Q"));
}

TEST(Instructions, IfcKindField) {
    const auto i32 = Instruction::ifc(RelOp::Gt, NumericConstant::int32(-1), 0);
    EXPECT_EQ(bits_of(i32), "110" "101" "01" + std::string(32, '1') + "0000");
    const auto f16 = Instruction::ifc(RelOp::Ne, NumericConstant::fp16(1.0), 0);
    EXPECT_EQ(bits_of(f16), oracle::strip("110 001 10 0011110000000000 0000"));
    const auto f32 = Instruction::ifc(RelOp::Lt, NumericConstant::fp32(-2.5f), 0);
    EXPECT_EQ(bits_of(f32), "110" "100" "11" + oracle::strip("1 10000000 01000000000000000000000") + "0000");

    QrtreeHeader declared;
    declared.int_width = IntWidth::Int32;
    declared.float_width = FloatWidth::Fp16;
    const HeaderSet h = with_tree(declared);
    EXPECT_EQ(bits_of(i32, h), "110" "101" "0" + std::string(32, '1') + "0000");
    EXPECT_EQ(bits_of(f16, h), oracle::strip("110 001 1 0011110000000000 0000"));
    EXPECT_EQ(decode_one(bits_of(i32, h), h), i32);
    EXPECT_EQ(decode_one(bits_of(f16, h), h), f16);
    // Constants are widened or narrowed to the declared kind when the value survives.
    EXPECT_EQ(bits_of(Instruction::ifc(RelOp::Eq, NumericConstant::int16(1), 0), h),
              bits_of(Instruction::ifc(RelOp::Eq, NumericConstant::int32(1), 0), h));
    QrtreeHeader narrow;
    narrow.int_width = IntWidth::Int16;
    EXPECT_THROW(bits_of(Instruction::ifc(RelOp::Eq, NumericConstant::int32(70000), 0), with_tree(narrow)), Error);
}

TEST(Instructions, DecodeExamples) {
    EXPECT_EQ(decode_one("1000000"), Instruction::go_to(0));
    EXPECT_EQ(decode_one(oracle::strip("010 1 0001")), Instruction::print(Reference{1}));
    EXPECT_EQ(decode_one(oracle::strip("011 0 00 0000011")), Instruction::printex(StringConstant::ascii7("")));
    EXPECT_EQ(decode_error("1110000"), ErrorKind::Unsupported);
    EXPECT_EQ(decode_error(oracle::strip("110 110 00 0000000000000101 0000")), ErrorKind::Unsupported);
    EXPECT_EQ(decode_error(oracle::strip("110 111 00 0000000000000101 0000")), ErrorKind::Unsupported);
    EXPECT_EQ(decode_error(oracle::strip("010 0 11 0000011")), ErrorKind::MalformedStream);
    EXPECT_EQ(decode_error(oracle::strip("110 010 00 00000000")), ErrorKind::EndOfStream);
}

TEST(Instructions, DictOperands) {
    DictConfig d;
    d.global = {{"en", {"Yes", "No", "Cancel", "Ok"}}};
    d.specific_order = {{{"en", {"a", "b", "c", "d", "e"}}}};
    const auto i = Instruction::print(StringConstant::dict(DictScope::Specific, 4));
    EXPECT_EQ(bits_of(i, {}, d), "010" "0" "10" "1" "100");
    EXPECT_EQ(decode_one("010" "0" "10" "1" "100", {}, d), i);
}

TEST(Instructions, IntTypeInt16ShrinksEachIntegerIfcByOneBit) {
    QrtreeHeader t;
    t.int_width = IntWidth::Int16;
    const HeaderSet declared = with_tree(t);
    const HeaderSet plain = with_tree({});
    const std::vector<Instruction> sample = {
        Instruction::ifc(RelOp::Le, NumericConstant::int16(5), 4),
        Instruction::ifc(RelOp::Ge, NumericConstant::int16(-300), 0),
        Instruction::ifc(RelOp::Eq, NumericConstant::fp32(0.5f), 2),
        Instruction::ifc(RelOp::Ne, NumericConstant::fp16(3.0), 1),
        Instruction::print(StringConstant::ascii7("x")),
        Instruction::go_to(7),
        Instruction::if_equal(Reference{3}, 1),
    };
    for (const auto& i : sample) {
        const std::string a = bits_of(i, plain);
        const std::string b = bits_of(i, declared);
        if (i.opcode == Opcode::Ifc && i.number.is_integer()) {
            ASSERT_EQ(b.size() + 1, a.size());
            // Only the size bit after "110 rrr 0" disappears.
            EXPECT_EQ(a.substr(0, 7) + a.substr(8), b);
        } else {
            EXPECT_EQ(a, b);
        }
    }

    Program p = appendix_b();
    std::size_t integer_ifcs = 0;
    for (const auto& i : p.instructions) integer_ifcs += i.opcode == Opcode::Ifc && i.number.is_integer();
    ASSERT_EQ(integer_ifcs, 3u);
    p.headers.tree = t;
    assign_storage_kinds(p);
    // Payload shrinks by one bit per integer ifc; the header grows from "0" to "1 001 0 000".
    const auto payload_a = encode_program_payload(appendix_b(), {}).size();
    const auto payload_b = encode_program_payload(p, {}).size();
    EXPECT_EQ(payload_b, payload_a - integer_ifcs + 7);
}

TEST(Instructions, PrefixFreeOnSmallEnumeration) {
    std::vector<Instruction> all;
    const std::vector<Operand> operands = {StringConstant::ascii7(""), StringConstant::ascii7("a"),
                                           StringConstant::ascii7("b"), StringConstant::utf8("a"),
                                           Reference{0}, Reference{1}, Reference{15}};
    for (const auto& o : operands) {
        all.push_back(Instruction::input(o));
        all.push_back(Instruction::inputs(o));
        all.push_back(Instruction::print(o));
        all.push_back(Instruction::printex(o));
        for (std::uint64_t j : {0u, 1u, 15u}) all.push_back(Instruction::if_equal(o, j));
    }
    for (std::uint64_t j : {0u, 1u, 14u, 15u, 16u}) all.push_back(Instruction::go_to(j));
    for (int op = 0; op < 6; ++op) {
        for (const auto& n : {NumericConstant::int16(0), NumericConstant::int16(1), NumericConstant::int32(0),
                              NumericConstant::fp16(0.0), NumericConstant::fp32(0.0f)}) {
            for (std::uint64_t j : {0u, 15u}) all.push_back(Instruction::ifc(static_cast<RelOp>(op), n, j));
        }
    }
    std::vector<std::string> codes;
    for (const auto& i : all) codes.push_back(bits_of(i));
    ASSERT_EQ(std::set<std::string>(codes.begin(), codes.end()).size(), codes.size());
    for (std::size_t a = 0; a < codes.size(); ++a) {
        for (std::size_t b = 0; b < codes.size(); ++b) {
            if (a != b) ASSERT_NE(codes[b].rfind(codes[a], 0), 0u) << codes[a] << " / " << codes[b];
        }
    }
}

TEST(Program, AppendixGolden) {
    const Program p = appendix_b();
    ASSERT_EQ(p.instructions.size(), 23u);
    const auto bytes = encode_program(p, {});
    EXPECT_EQ(bytes.size() * 8, 5704u);
    const std::string bits = BitString::from_bytes(bytes).to_string();
    EXPECT_EQ(bits.substr(0, 18), oracle::strip("001 0 0000 0 0000 0001 0"));
    const Program back = decode_program(bytes, {});
    EXPECT_EQ(back.instructions, p.instructions);
    EXPECT_EQ(back.headers.tree, p.headers.tree);
    EXPECT_EQ(encode_program(back, {}), bytes);
}

TEST(Program, EmptyProgramIsHeaderOnly) {
    const auto bytes = encode_program({}, {});
    // 15 script bits and the absent-tree bit make exactly two bytes.
    EXPECT_EQ(BitString::from_bytes(bytes).to_string(), oracle::strip("1 0 0000 0 0000 0001 0"));
    EXPECT_TRUE(decode_program(bytes, {}).instructions.empty());
}

TEST(Program, DecodeErrors) {
    auto kind_of = [](const std::vector<std::uint8_t>& bytes) {
        try {
            decode_program(bytes, {});
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    // 1 0 0000 0 0001 0001 0: dialect 1.
    EXPECT_EQ(kind_of(BitString::from_string("1 0 0000 0 0001 0001 0").bytes()), ErrorKind::UnknownDialect);
    EXPECT_EQ(kind_of({}), ErrorKind::EmptyPayload);
    auto bytes = encode_program(appendix_b(), {});
    bytes.resize(bytes.size() - 3);
    EXPECT_EQ(kind_of(bytes), ErrorKind::EndOfStream);
    // Jump past the end of a one-instruction program.
    Program bad;
    bad.instructions = {Instruction::go_to(1)};
    EXPECT_THROW(encode_program(bad, {}), Error);
}

TEST(Program, ChunkOfSequenceIsIncomplete) {
    const auto frame = encode_frame(Continuation{1, 3}, encode_program_payload(appendix_b(), {}));
    try {
        decode_program(frame, {});
        FAIL();
    } catch (const IncompleteSetError& e) {
        EXPECT_EQ(e.missing(), (std::vector<std::uint64_t>{0, 2}));
    }
}

TEST(Program, RandomRoundTrip) {
    const DictionaryStore store = gen::fuzz_store();
    gen::ProgramGenerator g(1234);
    for (int i = 0; i < 2000; ++i) {
        const Program p = g.program();
        const auto bytes = encode_program(p, store);
        ASSERT_EQ(bytes.size() * 8, encoded_bit_length(p, store));
        const Program back = decode_program(bytes, store);
        ASSERT_EQ(back.instructions, p.instructions) << i;
        ASSERT_EQ(back.headers.tree, p.headers.tree) << i;
        ASSERT_EQ(back.headers.script.url, p.headers.script.url) << i;
        ASSERT_EQ(encode_program(back, store), bytes) << i;
    }
}
