#include <gtest/gtest.h>

#include "../support/program_gen.hpp"
#include "oracles.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/suggest.hpp"
#include "qrtree/vm.hpp"

using namespace qrtree;

namespace {

long payload_delta(const Program& before, const Program& after, const DictionaryStore& store) {
    return static_cast<long>(encode_program_payload(before, store).size()) -
           static_cast<long>(encode_program_payload(after, store).size());
}

}  // namespace

TEST(SuggestLocal, SingleShortStringIsNotWorthIt) {
    const Program p = assemble("print \"Yes\"\n");
    EXPECT_TRUE(suggest_local_dictionary(p, {}, 8).words.empty());
    EXPECT_TRUE(suggest_local_dictionary(Program{}, {}, 8).words.empty());
}

TEST(SuggestLocal, RepeatedLongStringIsChosen) {
    const std::string s = "Call the emergency number immediately!!!";  // 40 characters
    ASSERT_EQ(s.size(), 40u);
    std::string text;
    for (int i = 0; i < 5; ++i) text += "print \"" + s + "\"\nprint \"x" + std::to_string(i) + "\"\n";
    const Program p = assemble(text);
    const auto suggestion = suggest_local_dictionary(p, {}, 8);
    ASSERT_EQ(suggestion.words, std::vector<std::string>{s});
    EXPECT_GT(suggestion.saved_bits, 0);
    const Program applied = apply_local_dictionary(p, suggestion.words);
    EXPECT_EQ(payload_delta(p, applied, {}), suggestion.saved_bits);
}

TEST(SuggestLocal, SavingsMatchEncodedLengthOnAppendix) {
    const Program p = assemble(oracle::read_file(fixture("appendix_b.qrt")));
    const auto suggestion = suggest_local_dictionary(p, {}, 16);
    ASSERT_FALSE(suggestion.words.empty());
    const Program applied = apply_local_dictionary(p, suggestion.words);
    EXPECT_EQ(payload_delta(p, applied, {}), suggestion.saved_bits);
    // Behaviour is unchanged.
    for (const auto& answers : std::vector<std::vector<std::string>>{{"4", "Yes"}, {"7"}, {"35"}}) {
        ScriptedHost a(answers), b(answers);
        run(p, {}, a);
        run(applied, make_dict_config({}, applied.headers.tree), b);
        EXPECT_EQ(a.outputs(), b.outputs());
    }
}

TEST(SuggestLocal, MaxWordsBound) {
    std::string text;
    for (int w = 0; w < 6; ++w) {
        for (int i = 0; i < 4; ++i) text += "print \"A fairly long repeated sentence number " + std::to_string(w) + "\"\n";
    }
    const Program p = assemble(text);
    EXPECT_EQ(suggest_local_dictionary(p, {}, 6).words.size(), 6u);
    EXPECT_LE(suggest_local_dictionary(p, {}, 2).words.size(), 2u);
    EXPECT_TRUE(suggest_local_dictionary(p, {}, 0).words.empty());
}

TEST(SuggestLocal, SavingsExactOnRandomPrograms) {
    const DictionaryStore store = gen::fuzz_store();
    gen::ProgramGenerator g(77);
    int applied_count = 0;
    for (int i = 0; i < 400; ++i) {
        Program p = g.program(30);
        // Duplicate a few instructions so repeated strings exist.
        const std::size_t n = p.instructions.size();
        for (std::size_t k = 0; k < n; ++k) {
            const auto& ins = p.instructions[k];
            if (ins.opcode == Opcode::Print && std::holds_alternative<StringConstant>(ins.operand)) {
                p.instructions.push_back(Instruction::print(ins.operand));
            }
        }
        const auto suggestion = suggest_local_dictionary(p, store, 4);
        if (suggestion.words.empty()) continue;
        ++applied_count;
        EXPECT_GT(suggestion.saved_bits, 0);
        const Program applied = apply_local_dictionary(p, suggestion.words);
        ASSERT_EQ(payload_delta(p, applied, store), suggestion.saved_bits) << i;
    }
    EXPECT_GT(applied_count, 20);
}
