#include "qrtree/codec.hpp"

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

constexpr unsigned kExpBase = 4;

void encode_operand(BitWriter& out, const Operand& operand, const DictConfig& dicts) {
    if (const auto* ref = std::get_if<Reference>(&operand)) {
        out.write_bit(true);
        encode_exp(out, ref->id, kExpBase);
    } else {
        out.write_bit(false);
        encode_string(out, std::get<StringConstant>(operand), dicts);
    }
}

Operand decode_operand(BitReader& in, const DictConfig& dicts) {
    if (in.read_bit()) return Reference{decode_exp(in, kExpBase)};
    return decode_string(in, dicts);
}

}  // namespace

void encode_instruction(BitWriter& out, const Instruction& ins, const HeaderSet& headers,
                        const DictConfig& dicts) {
    out.write_bits(static_cast<std::uint64_t>(ins.opcode), 3);
    switch (ins.opcode) {
        case Opcode::Input:
        case Opcode::Inputs:
        case Opcode::Print:
        case Opcode::Printex:
            encode_operand(out, ins.operand, dicts);
            return;
        case Opcode::Goto:
            encode_exp(out, ins.jump, kExpBase);
            return;
        case Opcode::If:
            encode_operand(out, ins.operand, dicts);
            encode_exp(out, ins.jump, kExpBase);
            return;
        case Opcode::Ifc: {
            if (static_cast<unsigned>(ins.rel_op) > static_cast<unsigned>(RelOp::Gt)) {
                throw Error(ErrorKind::Encode, "invalid relational operator");
            }
            out.write_bits(static_cast<std::uint64_t>(ins.rel_op), 3);
            const NumericConstant stored = to_storage_kind(ins.number, headers);
            const bool real = !stored.is_integer();
            out.write_bit(real);
            const bool declared = real ? declared_real_kind(headers).has_value()
                                       : declared_integer_kind(headers).has_value();
            if (!declared) out.write_bit(width_of(stored.kind()) == 32);
            encode_number(out, stored);
            encode_exp(out, ins.jump, kExpBase);
            return;
        }
    }
    throw Error(ErrorKind::Encode, "invalid opcode");
}

BitString encode_instruction(const Instruction& ins, const HeaderSet& headers,
                             const DictConfig& dicts) {
    BitWriter out;
    encode_instruction(out, ins, headers, dicts);
    return std::move(out).take();
}

Instruction decode_instruction(BitReader& in, const HeaderSet& headers, const DictConfig& dicts) {
    const std::size_t at = in.position();
    const auto opcode = in.read_bits(3);
    switch (static_cast<Opcode>(opcode)) {
        case Opcode::Input: return Instruction::input(decode_operand(in, dicts));
        case Opcode::Inputs: return Instruction::inputs(decode_operand(in, dicts));
        case Opcode::Print: return Instruction::print(decode_operand(in, dicts));
        case Opcode::Printex: return Instruction::printex(decode_operand(in, dicts));
        case Opcode::Goto: return Instruction::go_to(decode_exp(in, kExpBase));
        case Opcode::If: {
            Operand operand = decode_operand(in, dicts);
            return Instruction::if_equal(std::move(operand), decode_exp(in, kExpBase));
        }
        case Opcode::Ifc: {
            const std::size_t op_at = in.position();
            const auto op = in.read_bits(3);
            if (op > static_cast<std::uint64_t>(RelOp::Gt)) {
                throw StreamError(ErrorKind::Unsupported,
                                  "relational operator " + std::to_string(op), op_at);
            }
            const bool real = in.read_bit();
            auto kind = real ? declared_real_kind(headers) : declared_integer_kind(headers);
            if (!kind) {
                const bool wide = in.read_bit();
                kind = real ? (wide ? NumericKind::Fp32 : NumericKind::Fp16)
                            : (wide ? NumericKind::Int32 : NumericKind::Int16);
            }
            const NumericConstant number = decode_number(in, *kind);
            return Instruction::ifc(static_cast<RelOp>(op), number, decode_exp(in, kExpBase));
        }
    }
    throw StreamError(ErrorKind::Unsupported, "extended opcode 111", at);
}

BitString encode_program_payload(const Program& program, const DictionaryStore& store) {
    validate_jumps(program);
    const DictConfig dicts = make_dict_config(store, program.headers.tree);
    BitWriter out;
    encode_script_fields(out, program.headers.script);
    out.append(encode_qrtree_header(program.headers.tree));
    for (const Instruction& ins : program.instructions) {
        encode_instruction(out, ins, program.headers, dicts);
    }
    return std::move(out).take();
}

Program decode_program_payload(const BitString& payload, const DictionaryStore& store,
                               const UserDefHandler& user_def) {
    BitReader in(payload);
    Program program;
    decode_script_fields(in, program.headers.script);
    program.headers.tree = decode_qrtree_header(in, user_def);
    const DictConfig dicts = make_dict_config(store, program.headers.tree);
    while (!in.at_end()) {
        program.instructions.push_back(decode_instruction(in, program.headers, dicts));
    }
    validate_jumps(program);
    return program;
}

std::vector<std::uint8_t> encode_program(const Program& program, const DictionaryStore& store) {
    return encode_frame(program.headers.script.continuation,
                        encode_program_payload(program, store));
}

Program decode_program(std::span<const std::uint8_t> bytes, const DictionaryStore& store,
                       const UserDefHandler& user_def) {
    if (bytes.empty()) throw Error(ErrorKind::EmptyPayload, "empty bytecode");
    Frame frame = decode_frame(bytes);
    if (frame.continuation && frame.continuation->sequence_length > 1) {
        std::vector<std::uint64_t> missing;
        for (std::uint64_t i = 0; i < frame.continuation->sequence_length; ++i) {
            if (i != frame.continuation->sequence_number) missing.push_back(i);
        }
        throw IncompleteSetError("code is chunk " +
                                     std::to_string(frame.continuation->sequence_number) +
                                     " of " +
                                     std::to_string(frame.continuation->sequence_length),
                                 std::move(missing));
    }
    Program program = decode_program_payload(frame.payload, store, user_def);
    program.headers.script.padding_bits = frame.padding_bits;
    program.headers.script.continuation = frame.continuation;
    return program;
}

std::size_t encoded_bit_length(const Program& program, const DictionaryStore& store) {
    return encode_program(program, store).size() * 8;
}

}  // namespace qrtree
