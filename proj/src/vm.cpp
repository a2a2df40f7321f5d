#include "qrtree/vm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "qrtree/error.hpp"

namespace qrtree {

std::string render(const Output& output) {
    if (const auto* ref = std::get_if<Reference>(&output)) {
        return "[reference " + std::to_string(ref->id) + "]";
    }
    return std::get<std::string>(output);
}

namespace {

Output resolve_operand(const Operand& operand, const DictConfig& dicts) {
    if (const auto* ref = std::get_if<Reference>(&operand)) return *ref;
    const auto& s = std::get<StringConstant>(operand);
    if (s.is_dict()) return resolve_word(dicts, s.scope(), s.index());
    return s.text();
}

// The text an answer must equal for an if instruction to fire.
std::string match_value(const Operand& operand, const DictConfig& dicts) {
    if (const auto* ref = std::get_if<Reference>(&operand)) return std::to_string(ref->id);
    return std::get<std::string>(resolve_operand(operand, dicts));
}

}  // namespace

Prompt infer_choices(const Program& program, std::size_t input_index, const DictConfig& dicts) {
    const auto& code = program.instructions;
    Prompt prompt;
    prompt.pc = input_index;
    prompt.caption = resolve_operand(code.at(input_index).operand, dicts);
    std::size_t i = input_index + 1;
    for (; i < code.size() && code[i].opcode == Opcode::If; ++i) {
        Choice choice;
        choice.label = render(resolve_operand(code[i].operand, dicts));
        choice.value = match_value(code[i].operand, dicts);
        choice.origin = i;
        prompt.choices.push_back(std::move(choice));
    }
    if (!prompt.choices.empty() && i < code.size() && code[i].opcode == Opcode::Goto) {
        prompt.choices.push_back(Choice{kOtherLabel, std::nullopt, std::nullopt});
    }
    prompt.mode = prompt.choices.empty() ? PromptMode::Direct : PromptMode::Indirect;
    return prompt;
}

std::optional<double> parse_numeric_input(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.starts_with('+')) text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

bool compare(double input, RelOp op, double constant) {
    switch (op) {
        case RelOp::Eq: return input == constant;
        case RelOp::Ne: return input != constant;
        case RelOp::Le: return input <= constant;
        case RelOp::Ge: return input >= constant;
        case RelOp::Lt: return input < constant;
        case RelOp::Gt: return input > constant;
    }
    return false;
}

Machine::Machine(Program program, DictConfig dicts)
    : program_(std::move(program)), dicts_(std::move(dicts)) {}

Output Machine::resolve(const Operand& operand) const { return resolve_operand(operand, dicts_); }

void Machine::emit(Output output) {
    transcript_.emplace_back(output);
    outputs_.push_back(std::move(output));
}

void Machine::jump(std::uint64_t relative) {
    const std::size_t count = program_.instructions.size();
    if (relative > count || pc_ + 1 + relative > count) {
        throw Error(ErrorKind::MalformedProgram,
                    "instruction " + std::to_string(pc_) + " jumps past the end of the program");
    }
    pc_ += 1 + relative;
}

void Machine::advance() {
    const auto& code = program_.instructions;
    while (!halted_ && !prompt_) {
        if (pc_ >= code.size()) {
            halted_ = true;
            break;
        }
        const Instruction& ins = code[pc_];
        switch (ins.opcode) {
            case Opcode::Print:
                emit(resolve(ins.operand));
                ++pc_;
                break;
            case Opcode::Printex:
                emit(resolve(ins.operand));
                halted_ = true;
                break;
            case Opcode::Inputs: {
                Prompt p;
                p.mode = PromptMode::Direct;
                p.caption = resolve(ins.operand);
                p.pc = pc_;
                prompt_ = std::move(p);
                transcript_.emplace_back(*prompt_);
                break;
            }
            case Opcode::Input:
                prompt_ = infer_choices(program_, pc_, dicts_);
                transcript_.emplace_back(*prompt_);
                break;
            case Opcode::Goto:
                jump(ins.jump);
                break;
            case Opcode::If:
                if (tmp_input_ && *tmp_input_ == match_value(ins.operand, dicts_)) {
                    jump(ins.jump);
                } else {
                    ++pc_;
                }
                break;
            case Opcode::Ifc: {
                const auto input = tmp_input_ ? parse_numeric_input(*tmp_input_) : std::nullopt;
                if (input && compare(*input, ins.rel_op, ins.number.value())) {
                    jump(ins.jump);
                } else {
                    ++pc_;
                }
                break;
            }
        }
    }
}

void Machine::accept(std::optional<std::string> value, Answer answer) {
    tmp_input_ = std::move(value);
    transcript_.emplace_back(std::move(answer));
    prompt_.reset();
    ++pc_;
}

void Machine::answer_text(const std::string& text) {
    if (!prompt_) throw Error(ErrorKind::InvalidArgument, "no question is pending");
    if (prompt_->mode == PromptMode::Indirect) {
        for (std::size_t i = 0; i < prompt_->choices.size(); ++i) {
            if (prompt_->choices[i].value == text) {
                answer_choice(i);
                return;
            }
        }
        for (std::size_t i = 0; i < prompt_->choices.size(); ++i) {
            if (prompt_->choices[i].label == text) {
                answer_choice(i);
                return;
            }
        }
        throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not one of the choices");
    }
    accept(text, Answer{text, std::nullopt});
}

void Machine::answer_choice(std::size_t index) {
    if (!prompt_) throw Error(ErrorKind::InvalidArgument, "no question is pending");
    if (prompt_->mode != PromptMode::Indirect) {
        throw Error(ErrorKind::InvalidArgument, "the pending question takes free text");
    }
    if (index >= prompt_->choices.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "choice " + std::to_string(index) + " out of range (" +
                        std::to_string(prompt_->choices.size()) + " choices)");
    }
    const Choice choice = prompt_->choices[index];
    accept(choice.value, Answer{choice.label, index});
}

ScriptedHost::ScriptedHost(std::vector<std::string> answers) : answers_(std::move(answers)) {}

void ScriptedHost::emit(const Output& output) { outputs_.push_back(output); }

const std::string& ScriptedHost::next_answer() {
    if (next_ >= answers_.size()) {
        throw Error(ErrorKind::HostAbort, "answer script exhausted after " +
                                              std::to_string(answers_.size()) + " answers");
    }
    return answers_[next_++];
}

std::string ScriptedHost::ask_direct(const Prompt&) { return next_answer(); }

std::size_t ScriptedHost::ask_indirect(const Prompt& prompt) {
    const std::string& answer = next_answer();
    for (std::size_t i = 0; i < prompt.choices.size(); ++i) {
        if (prompt.choices[i].value == answer) return i;
    }
    for (std::size_t i = 0; i < prompt.choices.size(); ++i) {
        if (prompt.choices[i].label == answer) return i;
    }
    throw Error(ErrorKind::HostAbort, "scripted answer '" + answer + "' is not a choice");
}

Transcript run(const Program& program, const DictConfig& dicts, Host& host) {
    Machine machine(program, dicts);
    std::size_t reported = 0;
    for (;;) {
        machine.advance();
        for (; reported < machine.outputs().size(); ++reported) {
            host.emit(machine.outputs()[reported]);
        }
        if (machine.halted()) break;
        const Prompt& prompt = *machine.prompt();
        if (prompt.mode == PromptMode::Indirect) {
            machine.answer_choice(host.ask_indirect(prompt));
        } else {
            machine.answer_text(host.ask_direct(prompt));
        }
    }
    return machine.transcript();
}

}  // namespace qrtree
