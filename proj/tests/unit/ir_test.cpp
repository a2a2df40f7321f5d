#include <gtest/gtest.h>

#include <cmath>

#include "../support/program_gen.hpp"
#include "oracles.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"

using namespace qrtree;

namespace {

IrLine only_line(std::string_view text) {
    const IrDocument doc = parse_ir(text);
    EXPECT_EQ(doc.lines.size(), 1u);
    return doc.lines.at(0);
}

NumericConstant ifc_number(const std::string& literal) {
    return assemble("ifc == " + literal + " (1)").instructions.at(0).number;
}

}  // namespace

TEST(ParseIr, ListingLines) {
    const IrLine ifc = only_line("(1) ifc <= 5 (6)");
    EXPECT_EQ(ifc.number, 1u);
    EXPECT_EQ(ifc.instruction.opcode, Opcode::Ifc);
    EXPECT_EQ(ifc.instruction.rel_op, RelOp::Le);
    EXPECT_EQ(ifc.instruction.number, NumericConstant::int16(5));
    EXPECT_EQ(ifc.target, 6u);

    const IrLine print = only_line("(8) print 1");
    EXPECT_EQ(print.number, 8u);
    EXPECT_EQ(print.instruction, Instruction::print(Reference{1}));
    EXPECT_FALSE(print.target);

    const IrLine iff = only_line("(11) if \"Yes\" (14)");
    EXPECT_EQ(iff.instruction.opcode, Opcode::If);
    EXPECT_EQ(std::get<StringConstant>(iff.instruction.operand), StringConstant::ascii7("Yes"));
    EXPECT_EQ(iff.target, 14u);
}

TEST(ParseIr, AllRelOps) {
    const std::pair<const char*, RelOp> ops[] = {{"==", RelOp::Eq}, {"!=", RelOp::Ne}, {"<=", RelOp::Le},
                                                 {">=", RelOp::Ge}, {"<", RelOp::Lt},   {">", RelOp::Gt}};
    for (const auto& [text, op] : ops) {
        EXPECT_EQ(only_line(std::string("ifc ") + text + " 1 (1)").instruction.rel_op, op) << text;
    }
}

TEST(ParseIr, Constants) {
    EXPECT_EQ(only_line("print dict:global:3").instruction,
              Instruction::print(StringConstant::dict(DictScope::Global, 3)));
    EXPECT_EQ(only_line("print dict:specific:0").instruction,
              Instruction::print(StringConstant::dict(DictScope::Specific, 0)));
    EXPECT_EQ(only_line("print dict:local:7").instruction,
              Instruction::print(StringConstant::dict(DictScope::Local, 7)));
    EXPECT_EQ(only_line(R"(print "a\"b\\c\n\x41")").instruction,
              Instruction::print(StringConstant::ascii7("a\"b\\c\nA")));
    EXPECT_EQ(only_line(R"(print u"plain")").instruction, Instruction::print(StringConstant::utf8("plain")));
    EXPECT_EQ(only_line("print \"caff\xC3\xA8\"").instruction,
              Instruction::print(StringConstant::utf8("caff\xC3\xA8")));
}

TEST(ParseIr, NumericLiterals) {
    EXPECT_EQ(ifc_number("-32768"), NumericConstant::int16(-32768));
    EXPECT_EQ(ifc_number("32768"), NumericConstant::int32(32768));
    EXPECT_EQ(ifc_number("5i32"), NumericConstant::int32(5));
    EXPECT_EQ(ifc_number("1.5"), NumericConstant::fp32(1.5f));
    EXPECT_EQ(ifc_number("1e3"), NumericConstant::fp32(1000.0f));
    EXPECT_EQ(ifc_number("1.5f16"), NumericConstant::fp16(1.5));
    EXPECT_EQ(ifc_number("7f32"), NumericConstant::fp32(7.0f));
    EXPECT_EQ(ifc_number("0x7e01:f16"), NumericConstant::from_bits(NumericKind::Fp16, 0x7E01));
    EXPECT_EQ(ifc_number("-inf"), NumericConstant::fp32(-INFINITY));
    EXPECT_TRUE(std::isnan(ifc_number("nan").value()));
}

TEST(ParseIr, DeclaredWidthsConvertLiterals) {
    const Program p = assemble(".int_type 32\n.float_type 16\nifc < 5 (2)\nifc > 0.5 (2)\n");
    EXPECT_EQ(p.instructions[0].number, NumericConstant::int32(5));
    EXPECT_EQ(p.instructions[1].number, NumericConstant::fp16(0.5));
    EXPECT_THROW(assemble(".float_type 16\nifc < 0.1 (1)\n"), Error);
    EXPECT_THROW(assemble(".int_type 16\nifc < 70000 (1)\n"), Error);
}

TEST(ParseIr, Directives) {
    const Program p = assemble(
        ".url \"https://example.org\"\n"
        ".dict_types global\n"
        ".dict_spec 1\n"
        ".dict_spec 0\n"
        ".dict_local 0 \"Yes\" \"No\"\n"
        ".dict_local 1 \"Si\" \"\"\n"
        "print dict:local:1\n");
    EXPECT_EQ(p.headers.script.url, "https://example.org");
    ASSERT_TRUE(p.headers.tree);
    EXPECT_EQ(p.headers.tree->dict_types->global, true);
    EXPECT_EQ(p.headers.tree->dict_types->specific, false);
    EXPECT_EQ(p.headers.tree->spec_indices, (std::vector<std::uint64_t>{1, 0}));
    ASSERT_EQ(p.headers.tree->local_dicts.size(), 2u);
    EXPECT_EQ(p.headers.tree->local_dicts[1].words[1], StringConstant::ascii7(""));
    EXPECT_TRUE(assemble(".tree_header\n").headers.tree);
    EXPECT_FALSE(assemble("print 1\n").headers.tree);
}

TEST(ParseIr, CommentsAndNumbering) {
    const IrDocument doc = parse_ir(
        "# leading comment\n"
        "(1)  input \"Question 1\"\n"
        "(2)  if \"Resp 1\" (6)\n"
        "(3)  if \"Resp 2\" (8)\n"
        "(4)  goto (10)\n"
        "(6)  # Code related to Resp 1\n"
        "(7)  printex \"one\"\n"
        "(8)  # Code related to Resp 2\n"
        "(9)  printex \"two\"   # trailing\n"
        "(10) inputs \"Question 2\"\n");
    ASSERT_EQ(doc.lines.size(), 7u);
    EXPECT_EQ(doc.labels.at(6), 4u);
    EXPECT_EQ(doc.labels.at(8), 5u);
    const Program p = resolve_jumps(doc);
    EXPECT_EQ(p.instructions[1].jump, 2u);  // (2) -> (6) lands on (7)
    EXPECT_EQ(p.instructions[2].jump, 2u);  // (3) -> (8) lands on (9)
    EXPECT_EQ(p.instructions[3].jump, 2u);
}

TEST(ParseIr, UnnumberedLinesContinueNumbering) {
    const IrDocument doc = parse_ir("(4) print 1\nprint 2\ngoto (7)\nprint 3\n");
    ASSERT_EQ(doc.lines.size(), 4u);
    EXPECT_EQ(doc.lines[1].number, 5u);
    EXPECT_EQ(doc.lines[3].number, 7u);
}

TEST(ParseIr, WrappedStringsFold) {
    const IrLine line = only_line("(6) print \"too low. You should call an\nambulance.\"");
    EXPECT_EQ(std::get<StringConstant>(line.instruction.operand).text(), "too low. You should call an ambulance.");
}

TEST(ParseIr, ErrorsCarryPosition) {
    auto position = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_ir(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    EXPECT_EQ(position("print 1\n(2) jump (3)\n"), (std::pair<std::size_t, std::size_t>{2, 5}));
    EXPECT_EQ(position("print \"abc").first, 1u);
    EXPECT_THROW(parse_ir("ifc <> 5 (2)"), ParseError);
    EXPECT_THROW(parse_ir("ifc < 5x (2)"), ParseError);
    EXPECT_THROW(parse_ir("ifc < 99999999999 (2)"), Error);
    EXPECT_THROW(parse_ir("print dict:other:1"), ParseError);
    EXPECT_THROW(parse_ir("goto 3"), ParseError);
    EXPECT_THROW(parse_ir("print \"\\q\""), ParseError);
    EXPECT_THROW(parse_ir("(3) print 1\n(2) print 2\n"), ParseError);
    EXPECT_THROW(parse_ir(".int_type 8\n"), ParseError);
}

TEST(ResolveJumps, RelativeDistances) {
    std::string text = "(5) goto (12)\n";
    for (int n = 6; n <= 12; ++n) text += "(" + std::to_string(n) + ") print 0\n";
    EXPECT_EQ(assemble(text).instructions[0].jump, 6u);
    EXPECT_EQ(assemble("(3) goto (4)\n(4) print 1\n").instructions[0].jump, 0u);
    // One past the last line is the end of the program.
    EXPECT_EQ(assemble("(0) goto (2)\n(1) print 1\n").instructions[0].jump, 1u);
}

TEST(ResolveJumps, ForwardOnly) {
    auto kind_of = [](std::string_view text) {
        try {
            assemble(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind_of("(3) if \"a\" (3)\n"), ErrorKind::MalformedProgram);
    EXPECT_EQ(kind_of("(1) print 1\n(2) goto (1)\n"), ErrorKind::MalformedProgram);
    EXPECT_EQ(kind_of("(1) goto (9)\n(2) print 1\n"), ErrorKind::MalformedProgram);
    try {
        assemble("(2) goto (1)\n");
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("forward"), std::string::npos);
    }
}

TEST(PrintIr, Basics) {
    EXPECT_EQ(print_ir({}), "");
    Program p;
    p.instructions = {Instruction::print(Reference{2}), Instruction::go_to(0), Instruction::printex(StringConstant::ascii7("x"))};
    const std::string text = print_ir(p);
    EXPECT_NE(text.find("(0) print 2\n"), std::string::npos);
    EXPECT_NE(text.find("(1) goto (2)\n"), std::string::npos);
    EXPECT_EQ(assemble(text), p);
}

TEST(PrintIr, AppendixRoundTrip) {
    const Program p = assemble(oracle::read_file(fixture("appendix_b.qrt")));
    ASSERT_EQ(p.instructions.size(), 23u);
    const std::string text = print_ir(p);
    EXPECT_NE(text.find("(1) ifc <= 5 (6)\n"), std::string::npos);
    EXPECT_NE(text.find("(13) goto (17)\n"), std::string::npos);
    EXPECT_EQ(assemble(text), p);
    EXPECT_EQ(print_ir(assemble(text)), text);
}

TEST(PrintIr, MinimalSuffixes) {
    EXPECT_EQ(format_number(NumericConstant::int16(5), {}), "5");
    EXPECT_EQ(format_number(NumericConstant::int32(5), {}), "5i32");
    EXPECT_EQ(format_number(NumericConstant::int32(40000), {}), "40000");
    EXPECT_EQ(format_number(NumericConstant::fp32(0.5f), {}), "0.5");
    EXPECT_EQ(format_number(NumericConstant::fp16(0.5), {}), "0.5f16");
    HeaderSet declared;
    declared.tree = QrtreeHeader{};
    declared.tree->float_width = FloatWidth::Fp16;
    EXPECT_EQ(format_number(NumericConstant::fp16(0.5), declared), "0.5");
}

TEST(PrintIr, RandomProgramsRoundTrip) {
    gen::ProgramGenerator g(99);
    for (int i = 0; i < 1500; ++i) {
        const Program p = g.program();
        const std::string text = print_ir(p);
        Program back;
        ASSERT_NO_THROW(back = assemble(text)) << text;
        ASSERT_EQ(back.instructions, p.instructions) << text;
        ASSERT_EQ(back.headers.tree, p.headers.tree) << text;
        ASSERT_EQ(back.headers.script.url, p.headers.script.url) << text;
    }
}
