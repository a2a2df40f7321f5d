#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrtree/program.hpp"

namespace qrtree {

// One numbered statement of the textual listing. The instruction's jump is left
// unresolved; `target` holds the absolute line number it names.
struct IrLine {
    std::uint64_t number = 0;  // explicit "(n)" or previous + 1
    std::size_t source_line = 0;
    Instruction instruction;
    std::optional<std::uint64_t> target;
};

struct IrDocument {
    HeaderSet headers;
    std::vector<IrLine> lines;
    // Every line number seen, including comment-only lines, mapped to the index of
    // the instruction it designates. Numbers after the last instruction map to the end.
    std::map<std::uint64_t, std::size_t> labels;
};

// Listing grammar, one statement per line:
//   [(n)] input|inputs|print|printex <constant>
//   [(n)] goto (target)
//   [(n)] if <constant> (target)
//   [(n)] ifc <relop> <number> (target)
// Constants: "text", u"text" (forced UTF-8), an unsigned reference number, or
// dict:global|specific|local:<index>. Numbers take an optional i16/i32/f16/f32 suffix;
// 0x<bits>:f16 and 0x<bits>:f32 give exact bit patterns. '#' comments run to end of
// line. A line break inside a string folds, with surrounding blanks, into one space.
// Header directives: .int_type 16|32, .float_type 16|32, .dict_types
// global|specific|none|all, .dict_spec <n>, .dict_local <lang> <string>...,
// .user_def <bits>, .url <string>, .tree_header.
IrDocument parse_ir(std::string_view text);

// Converts absolute targets to relative jumps. Throws MalformedProgram on backward,
// self or unknown targets.
Program resolve_jumps(const IrDocument& document);

// parse_ir, resolve_jumps and assign_storage_kinds in one go.
Program assemble(std::string_view text);

// Canonical listing: lines numbered from 0, header directives first. assemble(print_ir(p))
// equals p for every program already passed through assign_storage_kinds.
std::string print_ir(const Program& program);

std::string format_number(const NumericConstant& value, const HeaderSet& headers);
std::string format_operand(const Operand& operand);

}  // namespace qrtree
