#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "qrtree/datatypes.hpp"
#include "qrtree/header.hpp"

namespace qrtree {

enum class Opcode : std::uint8_t {
    Input = 0b000,    // indirect input (choice buttons)
    Inputs = 0b001,   // direct input (free text)
    Print = 0b010,
    Printex = 0b011,  // print, then terminate
    Goto = 0b100,
    If = 0b101,
    Ifc = 0b110,
};

enum class RelOp : std::uint8_t {
    Eq = 0b000,
    Ne = 0b001,
    Le = 0b010,
    Ge = 0b011,
    Lt = 0b100,
    Gt = 0b101,
};

const char* mnemonic(Opcode op);
const char* symbol(RelOp op);

// Opaque number pointing at material printed next to the code.
struct Reference {
    std::uint64_t id = 0;

    friend bool operator==(const Reference&, const Reference&) = default;
};

using Operand = std::variant<StringConstant, Reference>;

struct Instruction {
    Opcode opcode = Opcode::Print;
    Operand operand;         // input, inputs, print, printex, if
    RelOp rel_op = RelOp::Eq;  // ifc
    NumericConstant number;  // ifc
    std::uint64_t jump = 0;  // goto, if, ifc: instructions skipped; 0 = next one

    static Instruction input(Operand prompt);
    static Instruction inputs(Operand prompt);
    static Instruction print(Operand value);
    static Instruction printex(Operand value);
    static Instruction go_to(std::uint64_t jump);
    static Instruction if_equal(Operand value, std::uint64_t jump);
    static Instruction ifc(RelOp op, NumericConstant value, std::uint64_t jump);

    bool has_operand() const noexcept { return opcode != Opcode::Goto && opcode != Opcode::Ifc; }
    bool has_jump() const noexcept {
        return opcode == Opcode::Goto || opcode == Opcode::If || opcode == Opcode::Ifc;
    }

    // Compares only the fields the opcode uses.
    friend bool operator==(const Instruction& a, const Instruction& b);
};

struct Program {
    HeaderSet headers;
    std::vector<Instruction> instructions;

    friend bool operator==(const Program&, const Program&) = default;
};

// Width declared by the QRtree header for each numeric type, if any.
std::optional<NumericKind> declared_integer_kind(const HeaderSet& headers);
std::optional<NumericKind> declared_real_kind(const HeaderSet& headers);

// Converts `value` to the width the header declares for its type; unchanged when
// nothing is declared. Throws Encode when the value is not exactly representable.
NumericConstant to_storage_kind(const NumericConstant& value, const HeaderSet& headers);

// Applies to_storage_kind to every ifc constant.
void assign_storage_kinds(Program& program);

// Every jump lands inside the program or exactly one past its end.
void validate_jumps(const Program& program);

}  // namespace qrtree
