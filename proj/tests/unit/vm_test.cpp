#include <gtest/gtest.h>

#include <boost/rational.hpp>
#include <cmath>

#include "../support/program_gen.hpp"
#include "oracles.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/vm.hpp"

using namespace qrtree;

namespace {

const std::string kLow1 = "The person has a heart beat rate too low. You should call an ambulance.";
const std::string kLow2 =
    "In the mean time you should try doing a cardiac massage and then using the defibrillator.";
const std::string kGreat = "Great! Wait for the ambulance and keep the patient awake.";
const std::string kKeep =
    "Keep alternating between 2-3 minutes of cardiac massage and defibrillator charges until the "
    "ambulance arrives.";
const std::string kNormal = "The heart beat is normal.";
const std::string kSlow1 = "The person has a slightly low heart beat. Sit them down.";
const std::string kLater =
    "If they don't feel better after a couple of minutes it's better to call an ambulance.";
const std::string kHigh1 = "The person has a very high heart rate. Lay them down and make them do deep breaths.";

Program appendix_b() { return assemble(oracle::read_file(fixture("appendix_b.qrt"))); }

std::vector<std::string> rendered(const std::vector<Output>& outputs) {
    std::vector<std::string> out;
    for (const auto& o : outputs) out.push_back(render(o));
    return out;
}

std::vector<std::string> run_script(const Program& p, std::vector<std::string> answers,
                                    const DictConfig& dicts = {}) {
    ScriptedHost host(std::move(answers));
    run(p, dicts, host);
    return rendered(host.outputs());
}

using Rational = boost::rational<long long>;

// Exact value of a short decimal string such as "-2.75".
Rational parse_decimal(const std::string& text) {
    long long sign = 1;
    std::size_t i = 0;
    if (text[i] == '-') {
        sign = -1;
        ++i;
    }
    long long num = 0, den = 1;
    bool frac = false;
    for (; i < text.size(); ++i) {
        if (text[i] == '.') {
            frac = true;
            continue;
        }
        num = num * 10 + (text[i] - '0');
        if (frac) den *= 10;
    }
    return Rational(sign * num, den);
}

// Exact value of a dyadic double with a small denominator.
Rational exact(double v) {
    long long den = 1;
    while (std::floor(v * den) != v * den) den *= 2;
    return Rational(static_cast<long long>(v * den), den);
}

bool rational_compare(const Rational& a, RelOp op, const Rational& b) {
    switch (op) {
        case RelOp::Eq: return a == b;
        case RelOp::Ne: return a != b;
        case RelOp::Le: return a <= b;
        case RelOp::Ge: return a >= b;
        case RelOp::Lt: return a < b;
        case RelOp::Gt: return a > b;
    }
    return false;
}

// inputs "n"; ifc op c -> T; printex "F"; printex "T"
Program comparison_program(RelOp op, NumericConstant c) {
    Program p;
    p.instructions = {Instruction::inputs(StringConstant::ascii7("n")), Instruction::ifc(op, c, 1),
                      Instruction::printex(StringConstant::ascii7("F")),
                      Instruction::printex(StringConstant::ascii7("T"))};
    return p;
}

bool vm_compare(RelOp op, NumericConstant c, const std::string& input) {
    Machine m(comparison_program(op, c), {});
    m.advance();
    m.answer_text(input);
    m.advance();
    EXPECT_TRUE(m.halted());
    return render(m.outputs().back()) == "T";
}

}  // namespace

TEST(AppendixScenarios, LowRateYes) {
    EXPECT_EQ(run_script(appendix_b(), {"4", "Yes"}),
              (std::vector<std::string>{kLow1, kLow2, "[reference 1]", "[reference 2]", kGreat}));
}

TEST(AppendixScenarios, LowRateNo) {
    EXPECT_EQ(run_script(appendix_b(), {"4", "No"}),
              (std::vector<std::string>{kLow1, kLow2, "[reference 1]", "[reference 2]", kKeep}));
}

TEST(AppendixScenarios, LowRateOther) {
    EXPECT_EQ(run_script(appendix_b(), {"4", "Other"}),
              (std::vector<std::string>{kLow1, kLow2, "[reference 1]", "[reference 2]"}));
}

TEST(AppendixScenarios, SlightlyLowHighAndNormal) {
    EXPECT_EQ(run_script(appendix_b(), {"7"}), (std::vector<std::string>{kSlow1, kLater}));
    EXPECT_EQ(run_script(appendix_b(), {"35"}), (std::vector<std::string>{kHigh1, kLater}));
    EXPECT_EQ(run_script(appendix_b(), {"12"}), (std::vector<std::string>{kNormal}));
    // Unparseable input makes every comparison false: the normal branch.
    EXPECT_EQ(run_script(appendix_b(), {"many"}), (std::vector<std::string>{kNormal}));
}

TEST(AppendixScenarios, ReferencesAreStructuredEvents) {
    Machine m(appendix_b(), {});
    m.advance();
    m.answer_text("4");
    m.advance();
    ASSERT_EQ(m.outputs().size(), 4u);
    EXPECT_EQ(std::get<Reference>(m.outputs()[2]).id, 1u);
    EXPECT_EQ(std::get<Reference>(m.outputs()[3]).id, 2u);
}

TEST(AppendixScenarios, Deterministic) {
    for (const auto& answers : std::vector<std::vector<std::string>>{{"4", "Yes"}, {"4", "No"}, {"7"}, {"35"}, {"12"}}) {
        ScriptedHost a(answers), b(answers);
        EXPECT_EQ(run(appendix_b(), {}, a), run(appendix_b(), {}, b));
    }
}

TEST(InferChoices, IfRunWithTrailingGoto) {
    const Program p = assemble(
        "(1)  input \"Question 1\"\n"
        "(2)  if \"Resp 1\" (6)\n"
        "(3)  if \"Resp 2\" (8)\n"
        "(4)  if \"Resp 3\" (10)\n"
        "(5)  goto (12)\n"
        "(6)  # Code related to Resp 1\n"
        "(7)  printex \"one\"\n"
        "(8)  # Code related to Resp 2\n"
        "(9)  printex \"two\"\n"
        "(10) # Code related to Resp 3\n"
        "(11) printex \"three\"\n"
        "(12) inputs \"Question 2\"\n");
    const Prompt prompt = infer_choices(p, 0, {});
    EXPECT_EQ(prompt.mode, PromptMode::Indirect);
    std::vector<std::string> labels;
    for (const auto& c : prompt.choices) labels.push_back(c.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"Resp 1", "Resp 2", "Resp 3", "Other"}));
    EXPECT_TRUE(prompt.choices.back().is_other());
    EXPECT_EQ(prompt.choices[1].origin, 2u);

    // "Other" follows the goto to the chained direct question.
    Machine m(p, {});
    m.advance();
    m.answer_choice(3);
    m.advance();
    ASSERT_TRUE(m.prompt());
    EXPECT_EQ(m.prompt()->mode, PromptMode::Direct);
    EXPECT_EQ(render(m.prompt()->caption), "Question 2");
    EXPECT_FALSE(m.tmp_input());

    Machine r(p, {});
    r.advance();
    r.answer_choice(1);
    r.advance();
    EXPECT_TRUE(r.halted());
    EXPECT_EQ(rendered(r.outputs()).back(), "two");
}

TEST(InferChoices, AppendixPrompt) {
    const Program p = appendix_b();
    std::vector<std::string> labels;
    for (const auto& c : infer_choices(p, 10, {}).choices) labels.push_back(c.label);
    EXPECT_EQ(labels, (std::vector<std::string>{"Yes", "No", "Other"}));
}

TEST(InferChoices, NoGotoNoOtherAndEmptyRunIsDirect) {
    const Program no_goto = assemble("input \"q\"\nif \"a\" (3)\nprint \"b\"\nprint \"c\"\n");
    const Prompt p1 = infer_choices(no_goto, 0, {});
    ASSERT_EQ(p1.choices.size(), 1u);
    EXPECT_EQ(p1.choices[0].label, "a");

    const Program bare = assemble("input \"q\"\nprint \"b\"\n");
    const Prompt p2 = infer_choices(bare, 0, {});
    EXPECT_TRUE(p2.choices.empty());
    EXPECT_EQ(p2.mode, PromptMode::Direct);
    EXPECT_EQ(run_script(bare, {"anything"}), (std::vector<std::string>{"b"}));

    // ifc lines never contribute choices.
    const Program with_ifc = assemble("input \"q\"\nifc < 3 (3)\nif \"x\" (3)\n");
    EXPECT_TRUE(infer_choices(with_ifc, 0, {}).choices.empty());
}

TEST(InferChoices, DictionaryAndReferenceLabels) {
    DictConfig d;
    d.global = {{"en", {"Yes", "No"}}, {"it", {"Si", "No"}}};
    d.default_language = "en";
    d.active_language = "it";
    const Program p = assemble("input \"q\"\nif dict:global:0 (4)\nif 7 (4)\ngoto (5)\nprint \"hit\"\n");
    const Prompt prompt = infer_choices(p, 0, d);
    ASSERT_EQ(prompt.choices.size(), 3u);
    EXPECT_EQ(prompt.choices[0].label, "Si");
    EXPECT_EQ(prompt.choices[1].value, "7");
    EXPECT_EQ(run_script(p, {"Si"}, d), (std::vector<std::string>{"hit"}));
    EXPECT_EQ(run_script(p, {"7"}, d), (std::vector<std::string>{"hit"}));
    EXPECT_EQ(run_script(p, {"Other"}, d), std::vector<std::string>{});
}

TEST(Machine, EmptyAndPrintex) {
    Machine empty(Program{}, {});
    empty.advance();
    EXPECT_TRUE(empty.halted());
    EXPECT_TRUE(empty.transcript().empty());

    Program p;
    p.instructions = {Instruction::printex(StringConstant::ascii7("x")), Instruction::print(StringConstant::ascii7("y"))};
    EXPECT_EQ(run_script(p, {}), std::vector<std::string>{"x"});
}

TEST(Machine, AnswerErrors) {
    Machine m(appendix_b(), {});
    m.advance();
    EXPECT_THROW(m.answer_choice(0), Error);  // direct prompt
    m.answer_text("4");
    m.advance();
    EXPECT_THROW(m.answer_choice(3), Error);
    EXPECT_THROW(m.answer_text("Maybe"), Error);
    m.answer_text("Yes");
    m.advance();
    EXPECT_TRUE(m.halted());
    EXPECT_THROW(m.answer_text("x"), Error);
}

TEST(Machine, ScriptExhaustionAborts) {
    ScriptedHost host({"4"});
    try {
        run(appendix_b(), {}, host);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HostAbort);
    }
}

TEST(Machine, FalseBranchesAdvanceByOneAndPcIncreases) {
    gen::ProgramGenerator g(5);
    const DictionaryStore store = gen::fuzz_store();
    for (int i = 0; i < 500; ++i) {
        const Program p = g.program(16);
        DictConfig d;
        try {
            d = make_dict_config(store, p.headers.tree);
        } catch (const Error&) {
            continue;
        }
        Machine m(p, d);
        std::size_t last = 0, steps = 0;
        while (true) {
            try {
                m.advance();
            } catch (const Error&) {
                break;  // unresolvable dictionary words in random programs
            }
            ASSERT_GE(m.pc(), last);
            last = m.pc();
            if (m.halted()) break;
            ASSERT_LE(++steps, p.instructions.size());
            const Prompt& prompt = *m.prompt();
            if (prompt.mode == PromptMode::Indirect) {
                m.answer_choice(g.rng()() % prompt.choices.size());
            } else {
                m.answer_text(std::to_string(static_cast<int>(g.rng()() % 200) - 100));
            }
        }
    }
}

TEST(Compare, IeeeSemantics) {
    const double nan = std::nan("");
    for (RelOp op : {RelOp::Eq, RelOp::Le, RelOp::Ge, RelOp::Lt, RelOp::Gt}) {
        EXPECT_FALSE(compare(nan, op, 1.0));
        EXPECT_FALSE(compare(1.0, op, nan));
    }
    EXPECT_TRUE(compare(nan, RelOp::Ne, nan));
    EXPECT_TRUE(compare(-0.0, RelOp::Eq, 0.0));
    EXPECT_TRUE(compare(INFINITY, RelOp::Gt, 1e300));
    EXPECT_EQ(parse_numeric_input(" 12 "), 12.0);
    EXPECT_EQ(parse_numeric_input("+3.5"), 3.5);
    EXPECT_FALSE(parse_numeric_input("12 beats"));
    EXPECT_FALSE(parse_numeric_input(""));
}

TEST(Compare, AgreesWithRationalOracleOnGrid) {
    std::vector<NumericConstant> constants;
    for (int v : {-32768, -10, -1, 0, 1, 5, 10, 30, 32767}) constants.push_back(NumericConstant::int16(v));
    for (long v : {-100000L, 70000L}) constants.push_back(NumericConstant::int32(v));
    for (double v : {-2.5, -0.25, 0.0, 0.5, 1.75, 10.0}) {
        constants.push_back(NumericConstant::fp16(v));
        constants.push_back(NumericConstant::fp32(static_cast<float>(v)));
    }
    const std::vector<std::string> inputs = {"-100000", "-32768", "-32769", "-10", "-10.5", "-2.5", "-2.49", "-1", "-0.25", "0", "-0",
              "0.1",     "0.5",    "0.75",   "1",   "1.75",  "1.8",  "5",     "4.99", "5.01", "10",
              "10.0",    "29.9",   "30",     "70000", "32767", "32768"};
    for (int op = 0; op < 6; ++op) {
        for (const auto& c : constants) {
            const Rational rc = exact(c.value());
            for (const auto& in : inputs) {
                const bool expected = rational_compare(parse_decimal(in), static_cast<RelOp>(op), rc);
                ASSERT_EQ(vm_compare(static_cast<RelOp>(op), c, in), expected)
                    << in << " " << symbol(static_cast<RelOp>(op)) << " " << c.value();
            }
        }
    }
}
