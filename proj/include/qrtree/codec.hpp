#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrtree/bitstream.hpp"
#include "qrtree/dictionary.hpp"
#include "qrtree/header.hpp"
#include "qrtree/program.hpp"

namespace qrtree {

// Instruction layouts:
//   input/inputs/print/printex  opcode(3) type(1) constant
//   goto                        100 jump
//   if                          101 type(1) constant jump
//   ifc                         110 rel_op(3) kind(1) number jump
// type: 0 string, 1 reference (exp-4). kind: 00 INT16, 01 INT32, 10 FP16, 11 FP32;
// only the first bit is written when INT_TYPE / FLOAT_TYPE declares the width for
// that type. Jumps are exp-4.
void encode_instruction(BitWriter& out, const Instruction& instruction, const HeaderSet& headers,
                        const DictConfig& dicts);
BitString encode_instruction(const Instruction& instruction, const HeaderSet& headers,
                             const DictConfig& dicts);
Instruction decode_instruction(BitReader& in, const HeaderSet& headers, const DictConfig& dicts);

// Everything after the continuation field: QRscript fields, QRtree header, code.
// This is the unit that continuation chunks split and reassemble.
BitString encode_program_payload(const Program& program, const DictionaryStore& store);
Program decode_program_payload(const BitString& payload, const DictionaryStore& store,
                               const UserDefHandler& user_def = {});

// A single self-contained code: padding, marker, continuation field, payload.
std::vector<std::uint8_t> encode_program(const Program& program, const DictionaryStore& store);
// Throws IncompleteSet for a chunk of a multi-code sequence.
Program decode_program(std::span<const std::uint8_t> bytes, const DictionaryStore& store,
                       const UserDefHandler& user_def = {});

std::size_t encoded_bit_length(const Program& program, const DictionaryStore& store);

}  // namespace qrtree
