// qrtree: assemble, disassemble, pack into QR codes, run and serve QRtree programs.

#include <cctype>
#include <charconv>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qrtree/codec.hpp"
#include "qrtree/error.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/qrio.hpp"
#include "qrtree/server.hpp"
#include "qrtree/session.hpp"
#include "qrtree/suggest.hpp"
#include "qrtree/vm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qrtree;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kDecode = 3, kCapacity = 4, kVm = 5 };

// Raised around VM execution so its failures map to kVm whatever their kind.
struct VmFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Schema:
        case ErrorKind::Encode:
        case ErrorKind::MalformedProgram:
            return kParse;
        case ErrorKind::EndOfStream:
        case ErrorKind::MalformedStream:
        case ErrorKind::Unsupported:
        case ErrorKind::UnknownDialect:
        case ErrorKind::IncompleteSet:
        case ErrorKind::EmptyPayload:
            return kDecode;
        case ErrorKind::CapacityExceeded:
            return kCapacity;
        case ErrorKind::HostAbort:
            return kVm;
        default:
            return kOther;
    }
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Bytes read_bytes(const fs::path& path) {
    const std::string text = read_text(path);
    return Bytes(text.begin(), text.end());
}

void write_bytes(const fs::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
}

std::string lower_extension(const fs::path& path) {
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

bool is_image(const fs::path& path) {
    const auto ext = lower_extension(path);
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".bmp";
}

DictionaryStore load_store(const std::string& config) {
    return config.empty() ? DictionaryStore{} : DictionaryStore::load_config(config);
}

// Bytes of one self-contained code from .bin, .eqrc or image inputs; several inputs
// are reassembled as continuation chunks.
Bytes load_bytecode(const std::vector<std::string>& inputs) {
    std::vector<Bytes> frames;
    for (const auto& input : inputs) {
        frames.push_back(is_image(input) ? read_qr_image(input) : read_bytes(input));
    }
    if (frames.size() == 1) {
        const Frame frame = decode_frame(frames.front());
        if (!frame.continuation || frame.continuation->sequence_length == 1) return frames.front();
    }
    return reassemble_to_frame(frames);
}

Program load_program(const std::vector<std::string>& inputs, const DictionaryStore& store) {
    if (inputs.size() == 1 && lower_extension(inputs.front()) == ".qrt") {
        return assemble(read_text(inputs.front()));
    }
    return decode_program(load_bytecode(inputs), store);
}

std::optional<EcLevel> parse_level(const std::string& text) {
    if (text == "L" || text == "l" || text == "low") return EcLevel::Low;
    if (text == "M" || text == "m" || text == "medium") return EcLevel::Medium;
    if (text == "Q" || text == "q" || text == "quartile") return EcLevel::Quartile;
    if (text == "H" || text == "h" || text == "high") return EcLevel::High;
    return std::nullopt;
}

std::string percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
    return buf;
}

json header_json(const Program& program, std::size_t bits) {
    const auto& s = program.headers.script;
    json j;
    j["padding_bits"] = s.padding_bits;
    j["continuation"] = s.continuation
                            ? json{{"sequence_number", s.continuation->sequence_number},
                                   {"sequence_length", s.continuation->sequence_length}}
                            : json(nullptr);
    j["security_profile"] = s.security_profile;
    j["url"] = s.url ? json(*s.url) : json(nullptr);
    j["dialect"] = s.dialect == kDialectQrtree ? "QRtree" : std::to_string(s.dialect);
    j["version"] = s.version;
    if (const auto& t = program.headers.tree) {
        json tree;
        tree["int_type"] = t->int_width ? json(*t->int_width == IntWidth::Int32 ? "INT32" : "INT16")
                                        : json(nullptr);
        tree["float_type"] = t->float_width
                                 ? json(*t->float_width == FloatWidth::Fp32 ? "FP32" : "FP16")
                                 : json(nullptr);
        const DictTypes types = t->dict_types.value_or(DictTypes{});
        tree["dict_global"] = types.global;
        tree["dict_specific"] = types.specific;
        tree["dict_spec"] = t->spec_indices;
        json locals = json::array();
        for (const auto& l : t->local_dicts) {
            json words = json::array();
            for (const auto& w : l.words) words.push_back(w.text());
            locals.push_back({{"language", l.language}, {"words", words}});
        }
        tree["dict_local"] = locals;
        tree["user_def"] = t->user_def_payloads.size();
        j["qrtree_header"] = tree;
    } else {
        j["qrtree_header"] = nullptr;
    }
    j["instructions"] = program.instructions.size();
    j["bits"] = bits;
    j["bytes"] = bits / 8;
    j["capacity_fraction"] = static_cast<double>(bits) / (kMaxCodeBytes * 8.0);
    return j;
}

json capacity_json() {
    json table = json::array();
    for (int v = kMinQrVersion; v <= kMaxQrVersion; ++v) {
        table.push_back({{"version", v},
                         {"L", byte_capacity(v, EcLevel::Low)},
                         {"M", byte_capacity(v, EcLevel::Medium)},
                         {"Q", byte_capacity(v, EcLevel::Quartile)},
                         {"H", byte_capacity(v, EcLevel::High)}});
    }
    return table;
}

class ConsoleHost : public Host {
public:
    void emit(const Output& output) override { std::cout << render(output) << '\n'; }

    std::string ask_direct(const Prompt& prompt) override {
        std::cout << render(prompt.caption) << "\n> " << std::flush;
        return read_line();
    }

    std::size_t ask_indirect(const Prompt& prompt) override {
        std::cout << render(prompt.caption) << '\n';
        for (std::size_t i = 0; i < prompt.choices.size(); ++i) {
            std::cout << "  " << i + 1 << ") " << prompt.choices[i].label << '\n';
        }
        for (;;) {
            std::cout << "> " << std::flush;
            const std::string line = read_line();
            std::size_t pick = 0;
            const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), pick);
            if (ec == std::errc{} && ptr == line.data() + line.size() && pick >= 1 &&
                pick <= prompt.choices.size()) {
                return pick - 1;
            }
            for (std::size_t i = 0; i < prompt.choices.size(); ++i) {
                if (prompt.choices[i].label == line) return i;
            }
            std::cout << "choose 1-" << prompt.choices.size() << '\n';
        }
    }

private:
    static std::string read_line() {
        std::string line;
        if (!std::getline(std::cin, line)) throw Error(ErrorKind::HostAbort, "input closed");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
    }
};

// Prints outputs as they arrive while answering from a script.
class EchoingScriptedHost : public ScriptedHost {
public:
    using ScriptedHost::ScriptedHost;
    void emit(const Output& output) override {
        ScriptedHost::emit(output);
        std::cout << render(output) << '\n';
    }
};

std::vector<std::string> load_answers(const std::string& path) {
    const json doc = json::parse(read_text(path));
    if (!doc.is_array()) throw Error(ErrorKind::Schema, "answers file must hold a JSON array");
    std::vector<std::string> answers;
    for (const auto& a : doc) {
        if (a.is_string()) {
            answers.push_back(a.get<std::string>());
        } else if (a.is_number()) {
            answers.push_back(a.dump());
        } else {
            throw Error(ErrorKind::Schema, "answers must be strings or numbers");
        }
    }
    return answers;
}

std::sig_atomic_t volatile g_stop = 0;
SessionServer* g_server = nullptr;

void on_signal(int) {
    g_stop = 1;
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolchain for executable QR codes in the QRtree dialect"};
    app.require_subcommand(1);
    std::string dict_config;
    app.add_option("--dict-config", dict_config, "Dictionary configuration (JSON)");

    // asm
    auto* asm_cmd = app.add_subcommand("asm", "Assemble an IR listing into bytecode");
    std::string asm_in, asm_out;
    int int_type = 0, float_type = 0;
    std::size_t local_words = 0;
    asm_cmd->add_option("input", asm_in, "IR listing (.qrt)")->required();
    asm_cmd->add_option("-o,--output", asm_out, "Output bytecode (default: input with .bin)");
    asm_cmd->add_option("--int-type", int_type, "Declare INT_TYPE width")->check(CLI::IsMember({16, 32}));
    asm_cmd->add_option("--float-type", float_type, "Declare FLOAT_TYPE width")->check(CLI::IsMember({16, 32}));
    asm_cmd->add_option("--local-dict", local_words,
                        "Move up to N frequent strings into a local dictionary");

    // disasm
    auto* dis_cmd = app.add_subcommand("disasm", "Disassemble bytecode into an IR listing");
    std::vector<std::string> dis_in;
    std::string dis_out;
    dis_cmd->add_option("inputs", dis_in, "Bytecode (.bin), chunks (.eqrc) or QR images")->required();
    dis_cmd->add_option("-o,--output", dis_out, "Output listing (default: stdout)");

    // qr
    auto* qr_cmd = app.add_subcommand("qr", "Pack bytecode into QR codes and back");
    qr_cmd->require_subcommand(1);
    auto* qr_enc = qr_cmd->add_subcommand("encode", "Write bytecode as QR code image(s)");
    std::string enc_in, enc_out, ec_name = "L";
    bool split = false;
    int max_version = kMaxQrVersion, scale = 4;
    qr_enc->add_option("input", enc_in, "Bytecode (.bin) or IR listing (.qrt)")->required();
    qr_enc->add_option("-o,--output", enc_out, "Output PNG (default: input with .png)");
    qr_enc->add_flag("--split", split, "Split into continuation chunks when one code is too small");
    qr_enc->add_option("--ec", ec_name, "Error correction: L, M, Q or H");
    qr_enc->add_option("--version", max_version, "Largest QR version to use")->check(CLI::Range(1, 40));
    qr_enc->add_option("--scale", scale, "Pixels per module")->check(CLI::Range(1, 64));
    auto* qr_dec = qr_cmd->add_subcommand("decode", "Read QR code image(s) back into bytecode");
    std::vector<std::string> dec_in;
    std::string dec_out;
    qr_dec->add_option("inputs", dec_in, "QR images or .eqrc chunks, any order")->required();
    qr_dec->add_option("-o,--output", dec_out, "Output bytecode")->required();

    // run
    auto* run_cmd = app.add_subcommand("run", "Execute a program");
    std::vector<std::string> run_in;
    std::string answers_file, language, transcript_file;
    std::vector<std::string> inline_answers;
    run_cmd->add_option("inputs", run_in, ".qrt, .bin, .eqrc chunks or QR images")->required();
    run_cmd->add_option("--answers", answers_file, "JSON array of scripted answers");
    run_cmd->add_option("-a,--answer", inline_answers, "Scripted answer (repeatable)");
    run_cmd->add_option("--language", language, "Active dictionary language");
    run_cmd->add_option("--transcript", transcript_file, "Write the transcript as JSON");

    // serve
    auto* serve_cmd = app.add_subcommand("serve", "Serve the session API and web player");
    int port = 8080;
    std::string host = "127.0.0.1", static_dir, persist_dir;
    serve_cmd->add_option("--port", port, "TCP port (0 picks a free one)");
    serve_cmd->add_option("--host", host, "Address to bind");
    serve_cmd->add_option("--static-dir", static_dir, "Web player assets");
    serve_cmd->add_option("--persist", persist_dir, "Write session snapshots here");

    // dict
    auto* dict_cmd = app.add_subcommand("dict", "Dictionary tools");
    dict_cmd->require_subcommand(1);
    auto* validate_cmd = dict_cmd->add_subcommand("validate", "Check dictionary documents");
    std::vector<std::string> validate_in;
    validate_cmd->add_option("paths", validate_in, "Dictionary JSON files")->required();
    auto* suggest_cmd = dict_cmd->add_subcommand("suggest-local", "Propose a local dictionary");
    std::string suggest_in;
    std::size_t max_words = 16;
    suggest_cmd->add_option("input", suggest_in, "Program (.qrt or .bin)")->required();
    suggest_cmd->add_option("--max-words", max_words, "Upper bound on suggested words");

    // inspect
    auto* inspect_cmd = app.add_subcommand("inspect", "Print header fields as JSON");
    std::vector<std::string> inspect_in;
    bool capacity = false;
    inspect_cmd->add_option("inputs", inspect_in, "Program (.qrt, .bin, .eqrc or image)");
    inspect_cmd->add_flag("--capacity", capacity, "Print the byte capacity of every QR version");

    CLI11_PARSE(app, argc, argv);

    try {
        const DictionaryStore store = load_store(dict_config);

        if (*asm_cmd) {
            Program program = assemble(read_text(asm_in));
            if (int_type || float_type) {
                if (!program.headers.tree) program.headers.tree.emplace();
                if (int_type) program.headers.tree->int_width = int_type == 32 ? IntWidth::Int32 : IntWidth::Int16;
                if (float_type) {
                    program.headers.tree->float_width = float_type == 32 ? FloatWidth::Fp32 : FloatWidth::Fp16;
                }
                assign_storage_kinds(program);
            }
            if (local_words > 0) {
                const auto suggestion = suggest_local_dictionary(program, store, local_words);
                program = apply_local_dictionary(program, suggestion.words);
            }
            const Bytes bytes = encode_program(program, store);
            const fs::path out = asm_out.empty() ? fs::path(asm_in).replace_extension(".bin") : fs::path(asm_out);
            write_bytes(out, bytes);
            const std::size_t bits = bytes.size() * 8;
            std::cout << out.string() << ": " << program.instructions.size() << " instructions, "
                      << bits << " bits (" << bytes.size() << " bytes), "
                      << percent(static_cast<double>(bits) / (kMaxCodeBytes * 8.0))
                      << " of the maximum available capacity\n";
            return kOk;
        }

        if (*dis_cmd) {
            const Program program = decode_program(load_bytecode(dis_in), store);
            const std::string text = print_ir(program);
            if (dis_out.empty()) {
                std::cout << text;
            } else {
                write_text(dis_out, text);
            }
            return kOk;
        }

        if (*qr_enc) {
            const auto level = parse_level(ec_name);
            if (!level) throw Error(ErrorKind::InvalidArgument, "unknown error correction level " + ec_name);
            const Bytes bytes = lower_extension(enc_in) == ".qrt"
                                    ? encode_program(assemble(read_text(enc_in)), store)
                                    : read_bytes(enc_in);
            QrOptions options;
            options.level = *level;
            options.max_version = max_version;
            options.module_pixels = scale;
            const fs::path out = enc_out.empty() ? fs::path(enc_in).replace_extension(".png") : fs::path(enc_out);
            const std::size_t cap = byte_capacity(max_version, *level);
            if (bytes.size() <= cap) {
                const QrSymbol symbol = qr_encode(bytes, options);
                write_png(symbol, out, options);
                std::cout << out.string() << ": version " << symbol.version() << "-"
                          << to_string(symbol.level()) << ", " << bytes.size() << " bytes\n";
                return kOk;
            }
            if (!split) {
                qr_encode(bytes, options);  // throws with the required chunk count
            }
            const Frame frame = decode_frame(bytes);
            if (frame.continuation && frame.continuation->sequence_length > 1) {
                throw Error(ErrorKind::InvalidArgument, "input is already a continuation chunk");
            }
            const auto frames = split_with_continuation(frame.payload, cap);
            for (std::size_t i = 0; i < frames.size(); ++i) {
                fs::path png = out;
                png.replace_filename(out.stem().string() + "-" + std::to_string(i) + out.extension().string());
                const QrSymbol symbol = qr_encode(frames[i], options);
                write_png(symbol, png, options);
                fs::path chunk = png;
                write_bytes(chunk.replace_extension(".eqrc"), frames[i]);
                std::cout << png.string() << ": chunk " << i << " of " << frames.size() << ", version "
                          << symbol.version() << "-" << to_string(symbol.level()) << ", "
                          << frames[i].size() << " bytes\n";
            }
            return kOk;
        }

        if (*qr_dec) {
            const Bytes bytes = load_bytecode(dec_in);
            write_bytes(dec_out, bytes);
            std::cout << dec_out << ": " << bytes.size() << " bytes\n";
            return kOk;
        }

        if (*run_cmd) {
            DictionaryStore run_store = store;
            if (!language.empty()) run_store.active_language = language;
            const Program program = load_program(run_in, run_store);
            const DictConfig dicts = make_dict_config(run_store, program.headers.tree);
            Transcript transcript;
            try {
                std::vector<std::string> answers = inline_answers;
                if (!answers_file.empty()) {
                    const auto loaded = load_answers(answers_file);
                    answers.insert(answers.end(), loaded.begin(), loaded.end());
                }
                if (!answers_file.empty() || !inline_answers.empty()) {
                    EchoingScriptedHost host(std::move(answers));
                    transcript = run(program, dicts, host);
                } else {
                    ConsoleHost host;
                    transcript = run(program, dicts, host);
                }
            } catch (const Error& e) {
                throw VmFailure(e.what());
            }
            if (!transcript_file.empty()) write_text(transcript_file, transcript_json(transcript).dump(2) + "\n");
            return kOk;
        }

        if (*serve_cmd) {
            SessionStore sessions(store, persist_dir.empty() ? std::nullopt
                                                            : std::optional<fs::path>(persist_dir));
            SessionServer server(sessions, static_dir.empty() ? std::nullopt
                                                               : std::optional<fs::path>(static_dir));
            const int bound = server.bind(host, port);
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cout << "listening on http://" << host << ":" << bound << std::endl;
            server.serve();
            g_server = nullptr;
            return kOk;
        }

        if (*validate_cmd) {
            int status = kOk;
            for (const auto& path : validate_in) {
                try {
                    const auto dicts = load_dictionary_file(path);
                    std::cout << path << ": OK (";
                    for (std::size_t i = 0; i < dicts.size(); ++i) {
                        std::cout << (i ? ", " : "") << dicts[i].language << " " << dicts[i].words.size()
                                  << " words";
                    }
                    std::cout << ")\n";
                } catch (const Error& e) {
                    std::cerr << path << ": " << e.what() << '\n';
                    status = exit_code(e.kind());
                }
            }
            return status;
        }

        if (*suggest_cmd) {
            const Program program = load_program({suggest_in}, store);
            const auto suggestion = suggest_local_dictionary(program, store, max_words);
            json report = {{"words", suggestion.words}, {"saved_bits", suggestion.saved_bits}};
            std::cout << report.dump(2) << '\n';
            return kOk;
        }

        if (*inspect_cmd) {
            if (capacity) {
                std::cout << capacity_json().dump(2) << '\n';
                if (inspect_in.empty()) return kOk;
            }
            if (inspect_in.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to inspect");
            Program program = load_program(inspect_in, store);
            const Bytes bytes = encode_program(program, store);
            program.headers.script.padding_bits = decode_frame(bytes).padding_bits;
            std::cout << header_json(program, bytes.size() * 8).dump(2) << '\n';
            return kOk;
        }
    } catch (const VmFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVm;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
    return kOther;
}
