#include "qrtree/program.hpp"

#include <cmath>
#include <cstdint>

#include "qrtree/error.hpp"
#include "qrtree/float16.hpp"

namespace qrtree {

const char* mnemonic(Opcode op) {
    switch (op) {
        case Opcode::Input: return "input";
        case Opcode::Inputs: return "inputs";
        case Opcode::Print: return "print";
        case Opcode::Printex: return "printex";
        case Opcode::Goto: return "goto";
        case Opcode::If: return "if";
        case Opcode::Ifc: return "ifc";
    }
    return "?";
}

const char* symbol(RelOp op) {
    switch (op) {
        case RelOp::Eq: return "==";
        case RelOp::Ne: return "!=";
        case RelOp::Le: return "<=";
        case RelOp::Ge: return ">=";
        case RelOp::Lt: return "<";
        case RelOp::Gt: return ">";
    }
    return "?";
}

Instruction Instruction::input(Operand prompt) {
    Instruction i;
    i.opcode = Opcode::Input;
    i.operand = std::move(prompt);
    return i;
}

Instruction Instruction::inputs(Operand prompt) {
    Instruction i = input(std::move(prompt));
    i.opcode = Opcode::Inputs;
    return i;
}

Instruction Instruction::print(Operand value) {
    Instruction i = input(std::move(value));
    i.opcode = Opcode::Print;
    return i;
}

Instruction Instruction::printex(Operand value) {
    Instruction i = input(std::move(value));
    i.opcode = Opcode::Printex;
    return i;
}

Instruction Instruction::go_to(std::uint64_t jump) {
    Instruction i;
    i.opcode = Opcode::Goto;
    i.jump = jump;
    return i;
}

Instruction Instruction::if_equal(Operand value, std::uint64_t jump) {
    Instruction i = input(std::move(value));
    i.opcode = Opcode::If;
    i.jump = jump;
    return i;
}

Instruction Instruction::ifc(RelOp op, NumericConstant value, std::uint64_t jump) {
    Instruction i;
    i.opcode = Opcode::Ifc;
    i.rel_op = op;
    i.number = value;
    i.jump = jump;
    return i;
}

bool operator==(const Instruction& a, const Instruction& b) {
    if (a.opcode != b.opcode) return false;
    if (a.has_operand() && a.operand != b.operand) return false;
    if (a.has_jump() && a.jump != b.jump) return false;
    if (a.opcode == Opcode::Ifc && (a.rel_op != b.rel_op || a.number != b.number)) return false;
    return true;
}

std::optional<NumericKind> declared_integer_kind(const HeaderSet& headers) {
    if (!headers.tree || !headers.tree->int_width) return std::nullopt;
    return *headers.tree->int_width == IntWidth::Int32 ? NumericKind::Int32 : NumericKind::Int16;
}

std::optional<NumericKind> declared_real_kind(const HeaderSet& headers) {
    if (!headers.tree || !headers.tree->float_width) return std::nullopt;
    return *headers.tree->float_width == FloatWidth::Fp32 ? NumericKind::Fp32 : NumericKind::Fp16;
}

NumericConstant to_storage_kind(const NumericConstant& value, const HeaderSet& headers) {
    if (value.is_integer()) {
        const auto declared = declared_integer_kind(headers);
        if (!declared || value.kind() == *declared) return value;
        const NumericKind target = *declared;
        try {
            return target == NumericKind::Int16 ? NumericConstant::int16(value.int_value())
                                                : NumericConstant::int32(value.int_value());
        } catch (const Error&) {
            throw Error(ErrorKind::Encode, std::to_string(value.int_value()) +
                                               " is not representable as " + to_string(target));
        }
    }
    const auto declared = declared_real_kind(headers);
    if (!declared || value.kind() == *declared) return value;
    const NumericKind target = *declared;
    if (target == NumericKind::Fp32) {
        // Every binary16 value, NaN payloads included, has an exact binary32 image.
        const std::uint32_t h = value.bits();
        const std::uint32_t sign = (h & 0x8000u) << 16;
        if ((h & 0x7C00u) == 0x7C00u) {
            return NumericConstant::from_bits(NumericKind::Fp32,
                                              sign | 0x7F80'0000u | ((h & 0x3FFu) << 13));
        }
        return NumericConstant::fp32(half_to_float(static_cast<std::uint16_t>(h)));
    }
    const std::uint32_t f = value.bits();
    if ((f & 0x7F80'0000u) == 0x7F80'0000u && (f & 0x007F'FFFFu) != 0) {
        if ((f & 0x1FFFu) != 0) {
            throw Error(ErrorKind::Encode, "NaN payload is not representable as FP16");
        }
        return NumericConstant::from_bits(
            NumericKind::Fp16, ((f >> 16) & 0x8000u) | 0x7C00u | ((f >> 13) & 0x3FFu));
    }
    const NumericConstant narrowed = NumericConstant::fp16(value.value());
    if (float_bits(half_to_float(static_cast<std::uint16_t>(narrowed.bits()))) != f) {
        throw Error(ErrorKind::Encode,
                    std::to_string(value.value()) + " is not representable as FP16");
    }
    return narrowed;
}

void assign_storage_kinds(Program& program) {
    for (Instruction& ins : program.instructions) {
        if (ins.opcode == Opcode::Ifc) ins.number = to_storage_kind(ins.number, program.headers);
    }
}

void validate_jumps(const Program& program) {
    const std::size_t count = program.instructions.size();
    for (std::size_t pc = 0; pc < count; ++pc) {
        const Instruction& ins = program.instructions[pc];
        if (!ins.has_jump()) continue;
        if (ins.jump > count || pc + 1 + ins.jump > count) {
            throw Error(ErrorKind::MalformedProgram,
                        "instruction " + std::to_string(pc) + " jumps past the end of the program");
        }
    }
}

}  // namespace qrtree
