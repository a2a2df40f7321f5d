#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrtree/dictionary.hpp"
#include "qrtree/program.hpp"

namespace qrtree {

// Resolved text, or a pointer to material printed next to the code.
using Output = std::variant<std::string, Reference>;

std::string render(const Output& output);  // references as "[reference N]"

enum class PromptMode { Direct, Indirect };

struct Choice {
    std::string label;                 // what the user sees
    std::optional<std::string> value;  // stored in tmp_input; empty for "Other"
    std::optional<std::size_t> origin; // index of the if instruction

    bool is_other() const noexcept { return !value.has_value(); }
    friend bool operator==(const Choice&, const Choice&) = default;
};

struct Prompt {
    PromptMode mode = PromptMode::Direct;
    Output caption;
    std::vector<Choice> choices;  // indirect only; "Other" last when present
    std::size_t pc = 0;

    friend bool operator==(const Prompt&, const Prompt&) = default;
};

inline constexpr const char* kOtherLabel = "Other";

// Choices of the input instruction at `input_index`: the constants of the if
// instructions directly following it, plus "Other" when that run ends in a goto.
// No choices means the prompt is direct.
Prompt infer_choices(const Program& program, std::size_t input_index, const DictConfig& dicts);

struct Answer {
    std::string text;
    std::optional<std::size_t> choice;

    friend bool operator==(const Answer&, const Answer&) = default;
};

using TranscriptEntry = std::variant<Output, Prompt, Answer>;
using Transcript = std::vector<TranscriptEntry>;

// Steps a program until it needs an answer or halts.
class Machine {
public:
    Machine(Program program, DictConfig dicts);

    // Runs until a prompt is pending or the program halts.
    void advance();

    bool halted() const noexcept { return halted_; }
    const std::optional<Prompt>& prompt() const noexcept { return prompt_; }

    // Direct prompts, and indirect ones answered by text matching a choice value.
    void answer_text(const std::string& text);
    // Indirect prompts. Throws InvalidArgument when out of range.
    void answer_choice(std::size_t index);

    std::size_t pc() const noexcept { return pc_; }
    // Empty before any input and after "Other".
    const std::optional<std::string>& tmp_input() const noexcept { return tmp_input_; }
    const std::vector<Output>& outputs() const noexcept { return outputs_; }
    const Transcript& transcript() const noexcept { return transcript_; }
    const Program& program() const noexcept { return program_; }
    const DictConfig& dictionaries() const noexcept { return dicts_; }

private:
    Output resolve(const Operand& operand) const;
    void emit(Output output);
    void jump(std::uint64_t relative);
    void accept(std::optional<std::string> value, Answer answer);

    Program program_;
    DictConfig dicts_;
    std::size_t pc_ = 0;
    std::optional<std::string> tmp_input_;
    std::optional<Prompt> prompt_;
    bool halted_ = false;
    std::vector<Output> outputs_;
    Transcript transcript_;
};

bool compare(double input, RelOp op, double constant);

// Parses a user answer as a real number; nullopt when it is not one.
std::optional<double> parse_numeric_input(std::string_view text);

class Host {
public:
    virtual ~Host() = default;
    virtual void emit(const Output& output) = 0;
    virtual std::string ask_direct(const Prompt& prompt) = 0;
    virtual std::size_t ask_indirect(const Prompt& prompt) = 0;
};

// Answers from a list, in order. Indirect answers are matched against choice
// values, then labels. Throws HostAbort when the list runs out or nothing matches.
class ScriptedHost : public Host {
public:
    explicit ScriptedHost(std::vector<std::string> answers);

    void emit(const Output& output) override;
    std::string ask_direct(const Prompt& prompt) override;
    std::size_t ask_indirect(const Prompt& prompt) override;

    const std::vector<Output>& outputs() const noexcept { return outputs_; }
    std::size_t consumed() const noexcept { return next_; }

private:
    const std::string& next_answer();

    std::vector<std::string> answers_;
    std::size_t next_ = 0;
    std::vector<Output> outputs_;
};

Transcript run(const Program& program, const DictConfig& dicts, Host& host);

}  // namespace qrtree
