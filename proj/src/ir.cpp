#include "qrtree/ir.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <system_error>

#include "qrtree/error.hpp"
#include "qrtree/float16.hpp"

namespace qrtree {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_space(char c) { return is_blank(c) || c == '\n'; }

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    void skip_blanks() {
        while (!eof() && is_blank(peek())) get();
    }

    void skip_comment() {
        if (peek() != '#') return;
        while (!eof() && peek() != '\n') get();
    }

    bool at_statement_end() const { return eof() || peek() == '\n' || peek() == '#'; }

    void end_statement() {
        skip_blanks();
        skip_comment();
        if (!eof() && peek() != '\n') fail("unexpected '" + std::string(1, peek()) + "'");
        if (!eof()) get();
    }

    // Characters up to the next blank, line break, '(' or '#'.
    std::string word() {
        std::string out;
        while (!eof() && !is_space(peek()) && peek() != '(' && peek() != '#') out += get();
        return out;
    }

    std::uint64_t unsigned_number() {
        const std::size_t start = pos_;
        while (!eof() && peek() >= '0' && peek() <= '9') get();
        std::uint64_t value = 0;
        const auto token = text_.substr(start, pos_ - start);
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(token.empty() ? "expected a number" : "number out of range");
        }
        return value;
    }

    std::uint64_t parenthesized() {
        if (peek() != '(') fail("expected '('");
        get();
        skip_blanks();
        const std::uint64_t value = unsigned_number();
        skip_blanks();
        if (peek() != ')') fail("expected ')'");
        get();
        return value;
    }

    std::string quoted() {
        if (peek() != '"') fail("expected '\"'");
        get();
        std::string out;
        for (;;) {
            if (eof()) fail("unterminated string");
            const char c = get();
            if (c == '"') return out;
            if (c == '\n') {
                while (!out.empty() && is_blank(out.back())) out.pop_back();
                while (!eof() && is_space(peek())) get();
                out += ' ';
            } else if (c == '\\') {
                if (eof()) fail("unterminated string");
                const char e = get();
                switch (e) {
                    case '\\': out += '\\'; break;
                    case '"': out += '"'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'x': {
                        unsigned value = 0;
                        for (int k = 0; k < 2; ++k) {
                            const char h = eof() ? '\0' : get();
                            const auto digit = hex_digit(h);
                            if (!digit) fail("bad \\x escape");
                            value = value * 16 + *digit;
                        }
                        out += static_cast<char>(value);
                        break;
                    }
                    default: fail(std::string("unknown escape \\") + e);
                }
            } else {
                out += c;
            }
        }
    }

private:
    static std::optional<unsigned> hex_digit(char c) {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        return std::nullopt;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::optional<Opcode> parse_opcode(std::string_view word) {
    for (auto op : {Opcode::Input, Opcode::Inputs, Opcode::Print, Opcode::Printex, Opcode::Goto,
                    Opcode::If, Opcode::Ifc}) {
        if (word == mnemonic(op)) return op;
    }
    return std::nullopt;
}

std::optional<RelOp> parse_rel_op(std::string_view word) {
    for (auto op : {RelOp::Eq, RelOp::Ne, RelOp::Le, RelOp::Ge, RelOp::Lt, RelOp::Gt}) {
        if (word == symbol(op)) return op;
    }
    return std::nullopt;
}

StringConstant make_string(Scanner& in, std::string text, bool force_utf8) {
    try {
        return force_utf8 ? StringConstant::utf8(std::move(text))
                          : StringConstant::inline_text(std::move(text));
    } catch (const Error& e) {
        in.fail(e.what());
    }
}

StringConstant parse_string(Scanner& in) {
    bool utf8 = false;
    if (in.peek() == 'u' && in.peek(1) == '"') {
        in.get();
        utf8 = true;
    }
    std::string text = in.quoted();
    return make_string(in, std::move(text), utf8);
}

Operand parse_operand(Scanner& in) {
    const char c = in.peek();
    if (c == '"' || (c == 'u' && in.peek(1) == '"')) return parse_string(in);
    if (c >= '0' && c <= '9') return Reference{in.unsigned_number()};
    const std::string token = in.word();
    static constexpr std::string_view kDict = "dict:";
    if (token.starts_with(kDict)) {
        const std::string_view rest = std::string_view(token).substr(kDict.size());
        const auto colon = rest.find(':');
        if (colon != std::string_view::npos) {
            const std::string_view scope_name = rest.substr(0, colon);
            const std::string_view digits = rest.substr(colon + 1);
            std::optional<DictScope> scope;
            if (scope_name == "global") scope = DictScope::Global;
            if (scope_name == "specific" || scope_name == "spec") scope = DictScope::Specific;
            if (scope_name == "local") scope = DictScope::Local;
            std::uint64_t index = 0;
            const auto [ptr, ec] =
                std::from_chars(digits.data(), digits.data() + digits.size(), index);
            if (scope && !digits.empty() && ec == std::errc{} &&
                ptr == digits.data() + digits.size()) {
                return StringConstant::dict(*scope, index);
            }
        }
        in.fail("malformed dictionary constant '" + token + "'");
    }
    in.fail(token.empty() ? "expected a constant" : "unexpected '" + token + "'");
}

template <typename T>
bool parse_exact(std::string_view text, T& value, int base = 10) {
    if (text.empty()) return false;
    std::from_chars_result r;
    if constexpr (std::is_floating_point_v<T>) {
        r = std::from_chars(text.data(), text.data() + text.size(), value);
    } else {
        r = std::from_chars(text.data(), text.data() + text.size(), value, base);
    }
    return r.ec == std::errc{} && r.ptr == text.data() + text.size();
}

NumericConstant parse_number(Scanner& in) {
    const std::string token = in.word();
    if (token.empty()) in.fail("expected a number");
    auto bad = [&](const std::string& why) -> NumericConstant {
        in.fail(why + " '" + token + "'");
    };

    const auto colon = token.find(':');
    if (colon != std::string::npos) {
        const std::string_view digits = std::string_view(token).substr(0, colon);
        const std::string_view kind = std::string_view(token).substr(colon + 1);
        std::uint32_t bits = 0;
        if (!digits.starts_with("0x") || !parse_exact(digits.substr(2), bits, 16)) {
            return bad("malformed bit pattern");
        }
        if (kind == "f16" && bits <= 0xFFFF) return NumericConstant::from_bits(NumericKind::Fp16, bits);
        if (kind == "f32") return NumericConstant::from_bits(NumericKind::Fp32, bits);
        return bad("malformed bit pattern");
    }

    std::string_view body = token;
    std::string_view suffix;
    for (std::string_view s : {"i16", "i32", "f16", "f32"}) {
        if (body.size() > s.size() && body.ends_with(s)) {
            suffix = s;
            body.remove_suffix(s.size());
            break;
        }
    }
    if (body.starts_with('+')) body.remove_prefix(1);
    const bool real_body = body.find_first_of(".eEni") != std::string_view::npos;

    if (!real_body) {
        std::int64_t value = 0;
        if (!parse_exact(body, value)) return bad("malformed integer");
        try {
            if (suffix == "i16") return NumericConstant::int16(value);
            if (suffix == "i32") return NumericConstant::int32(value);
            if (suffix == "f16") return NumericConstant::fp16(static_cast<double>(value));
            if (suffix == "f32") {
                float f = 0;
                if (!parse_exact(body, f)) return bad("malformed real");
                return NumericConstant::fp32(f);
            }
            if (value >= INT16_MIN && value <= INT16_MAX) return NumericConstant::int16(value);
            return NumericConstant::int32(value);
        } catch (const Error& e) {
            return bad(e.what());
        }
    }
    if (suffix == "i16" || suffix == "i32") return bad("integer suffix on a real");
    if (suffix == "f16") {
        double d = 0;
        if (!parse_exact(body, d)) return bad("malformed real");
        return NumericConstant::fp16(d);
    }
    float f = 0;
    if (!parse_exact(body, f)) return bad("malformed real");
    return NumericConstant::fp32(f);
}

std::string print_bits(const BitString& bits) {
    return bits.empty() ? std::string("-") : bits.to_string();
}

void parse_directive(Scanner& in, HeaderSet& headers) {
    in.get();  // '.'
    const std::string name = in.word();
    in.skip_blanks();
    auto tree = [&]() -> QrtreeHeader& {
        if (!headers.tree) headers.tree.emplace();
        return *headers.tree;
    };
    auto width = [&]() {
        const std::string w = in.word();
        if (w != "16" && w != "32") in.fail("expected 16 or 32");
        return w == "32";
    };

    if (name == "tree_header") {
        tree();
    } else if (name == "int_type") {
        tree().int_width = width() ? IntWidth::Int32 : IntWidth::Int16;
    } else if (name == "float_type") {
        tree().float_width = width() ? FloatWidth::Fp32 : FloatWidth::Fp16;
    } else if (name == "dict_types") {
        const std::string w = in.word();
        if (w == "all") {
            tree().dict_types.reset();
        } else if (w == "global" || w == "specific" || w == "none") {
            tree().dict_types = DictTypes{w == "global", w == "specific"};
        } else {
            in.fail("expected global, specific, none or all");
        }
    } else if (name == "dict_spec") {
        tree().spec_indices.push_back(in.unsigned_number());
    } else if (name == "dict_local") {
        LocalDictionary local;
        local.language = in.unsigned_number();
        in.skip_blanks();
        while (!in.at_statement_end()) {
            local.words.push_back(parse_string(in));
            in.skip_blanks();
        }
        tree().local_dicts.push_back(std::move(local));
    } else if (name == "user_def") {
        const std::string bits = in.word();
        if (bits.empty() || (bits != "-" && bits.find_first_not_of("01") != std::string::npos)) {
            in.fail("expected a bit string");
        }
        tree().user_def_payloads.push_back(bits == "-" ? BitString{} : BitString::from_string(bits));
    } else if (name == "url") {
        headers.script.url = parse_string(in).text();
    } else {
        in.fail("unknown directive ." + name);
    }
    in.end_statement();
}

}  // namespace

IrDocument parse_ir(std::string_view text) {
    Scanner in(text);
    IrDocument doc;
    std::optional<std::uint64_t> last_number;
    std::vector<std::uint64_t> pending;  // numbers of comment-only lines

    auto claim = [&](std::uint64_t number, std::size_t line, std::size_t column) {
        if (last_number && number <= *last_number) {
            throw ParseError("line number " + std::to_string(number) +
                                 " does not follow " + std::to_string(*last_number),
                             line, column);
        }
        last_number = number;
    };

    for (;;) {
        while (!in.eof() && is_space(in.peek())) in.get();
        if (in.eof()) break;
        if (in.peek() == '#') {
            in.skip_comment();
            continue;
        }
        if (in.peek() == '.') {
            parse_directive(in, doc.headers);
            continue;
        }

        const std::size_t line = in.line();
        std::optional<std::uint64_t> number;
        if (in.peek() == '(') {
            const std::size_t column = in.column();
            number = in.parenthesized();
            claim(*number, line, column);
            in.skip_blanks();
            if (in.at_statement_end()) {
                pending.push_back(*number);
                in.end_statement();
                continue;
            }
        }

        const std::size_t column = in.column();
        const std::string word = in.word();
        const auto opcode = parse_opcode(word);
        if (!opcode) throw ParseError("unknown instruction '" + word + "'", line, column);
        if (!number) {
            number = last_number ? *last_number + 1 : 0;
            claim(*number, line, column);
        }

        IrLine ir;
        ir.number = *number;
        ir.source_line = line;
        in.skip_blanks();
        switch (*opcode) {
            case Opcode::Input:
            case Opcode::Inputs:
            case Opcode::Print:
            case Opcode::Printex:
                ir.instruction.opcode = *opcode;
                ir.instruction.operand = parse_operand(in);
                break;
            case Opcode::Goto:
                ir.instruction = Instruction::go_to(0);
                ir.target = in.parenthesized();
                break;
            case Opcode::If: {
                Operand operand = parse_operand(in);
                in.skip_blanks();
                ir.instruction = Instruction::if_equal(std::move(operand), 0);
                ir.target = in.parenthesized();
                break;
            }
            case Opcode::Ifc: {
                const std::string op_word = in.word();
                const auto op = parse_rel_op(op_word);
                if (!op) in.fail("unknown relational operator '" + op_word + "'");
                in.skip_blanks();
                const NumericConstant value = parse_number(in);
                in.skip_blanks();
                ir.instruction = Instruction::ifc(*op, value, 0);
                ir.target = in.parenthesized();
                break;
            }
        }
        in.end_statement();

        const std::size_t index = doc.lines.size();
        for (std::uint64_t p : pending) doc.labels[p] = index;
        pending.clear();
        doc.labels[ir.number] = index;
        doc.lines.push_back(std::move(ir));
    }
    for (std::uint64_t p : pending) doc.labels[p] = doc.lines.size();
    return doc;
}

Program resolve_jumps(const IrDocument& doc) {
    Program program;
    program.headers = doc.headers;
    const std::size_t count = doc.lines.size();
    const std::uint64_t end_number = doc.labels.empty() ? 0 : doc.labels.rbegin()->first + 1;

    for (std::size_t index = 0; index < count; ++index) {
        const IrLine& line = doc.lines[index];
        Instruction ins = line.instruction;
        if (line.target) {
            const std::uint64_t target = *line.target;
            const std::string where = "line " + std::to_string(line.source_line) + ": ";
            if (target <= line.number) {
                throw Error(ErrorKind::MalformedProgram,
                            where + "jump to (" + std::to_string(target) +
                                ") is not forward; only forward jumps are allowed");
            }
            std::size_t destination;
            if (target == end_number) {
                destination = count;
            } else if (auto it = doc.labels.find(target); it != doc.labels.end()) {
                destination = it->second;
            } else {
                throw Error(ErrorKind::MalformedProgram,
                            where + "jump to unknown line (" + std::to_string(target) + ")");
            }
            ins.jump = destination - index - 1;
        }
        program.instructions.push_back(std::move(ins));
    }
    return program;
}

Program assemble(std::string_view text) {
    Program program = resolve_jumps(parse_ir(text));
    assign_storage_kinds(program);
    return program;
}

std::string format_operand(const Operand& operand) {
    if (const auto* ref = std::get_if<Reference>(&operand)) return std::to_string(ref->id);
    const auto& s = std::get<StringConstant>(operand);
    if (s.is_dict()) {
        const char* scope = s.scope() == DictScope::Global     ? "global"
                            : s.scope() == DictScope::Specific ? "specific"
                                                               : "local";
        return std::string("dict:") + scope + ":" + std::to_string(s.index());
    }
    std::string out;
    if (s.encoding() == StringEncoding::Utf8 && is_ascii7(s.text())) out += 'u';
    out += '"';
    for (char c : s.text()) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F) {
                    char buf[5];
                    std::snprintf(buf, sizeof buf, "\\x%02x", static_cast<unsigned char>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string format_number(const NumericConstant& value, const HeaderSet& headers) {
    const NumericKind kind = value.kind();
    // A suffix is needed only where an unsuffixed literal would read back differently.
    bool native;
    if (value.is_integer()) {
        const std::int64_t v = value.int_value();
        const NumericKind inferred =
            v >= INT16_MIN && v <= INT16_MAX ? NumericKind::Int16 : NumericKind::Int32;
        native = declared_integer_kind(headers) || kind == inferred;
    } else {
        native = declared_real_kind(headers) || kind == NumericKind::Fp32;
    }
    const char* suffix = kind == NumericKind::Int16   ? "i16"
                         : kind == NumericKind::Int32 ? "i32"
                         : kind == NumericKind::Fp16  ? "f16"
                                                      : "f32";
    if (value.is_integer()) {
        return std::to_string(value.int_value()) + (native ? "" : suffix);
    }
    const double v = value.value();
    char buf[64];
    if (std::isnan(v)) {
        std::snprintf(buf, sizeof buf, kind == NumericKind::Fp16 ? "0x%04x:%s" : "0x%08x:%s",
                      value.bits(), suffix);
        return buf;
    }
    std::string out;
    if (std::isinf(v)) {
        out = v < 0 ? "-inf" : "inf";
    } else {
        const float f = static_cast<float>(v);  // exact for both real kinds
        const auto r = std::to_chars(buf, buf + sizeof buf, f);
        out.assign(buf, r.ptr);
        if (out.find_first_of(".e") == std::string::npos) out += ".0";
    }
    return out + (native ? "" : suffix);
}

std::string print_ir(const Program& program) {
    std::string out;
    const HeaderSet& h = program.headers;
    if (h.script.url) out += ".url " + format_operand(StringConstant::utf8(*h.script.url)) + "\n";
    if (h.tree) {
        const QrtreeHeader& t = *h.tree;
        std::string directives;
        if (t.int_width) {
            directives += std::string(".int_type ") +
                          (*t.int_width == IntWidth::Int32 ? "32" : "16") + "\n";
        }
        if (t.float_width) {
            directives += std::string(".float_type ") +
                          (*t.float_width == FloatWidth::Fp32 ? "32" : "16") + "\n";
        }
        if (t.dict_types && !(t.dict_types->global && t.dict_types->specific)) {
            directives += std::string(".dict_types ") +
                          (t.dict_types->global     ? "global"
                           : t.dict_types->specific ? "specific"
                                                    : "none") +
                          "\n";
        }
        for (auto index : t.spec_indices) directives += ".dict_spec " + std::to_string(index) + "\n";
        for (const auto& local : t.local_dicts) {
            directives += ".dict_local " + std::to_string(local.language);
            for (const auto& word : local.words) directives += " " + format_operand(word);
            directives += "\n";
        }
        for (const auto& bits : t.user_def_payloads) directives += ".user_def " + print_bits(bits) + "\n";
        out += directives.empty() ? std::string(".tree_header\n") : directives;
    }

    for (std::size_t i = 0; i < program.instructions.size(); ++i) {
        const Instruction& ins = program.instructions[i];
        out += "(" + std::to_string(i) + ") " + mnemonic(ins.opcode);
        if (ins.opcode == Opcode::Ifc) {
            out += std::string(" ") + symbol(ins.rel_op) + " " + format_number(ins.number, h);
        } else if (ins.has_operand()) {
            out += " " + format_operand(ins.operand);
        }
        if (ins.has_jump()) out += " (" + std::to_string(i + 1 + ins.jump) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace qrtree
