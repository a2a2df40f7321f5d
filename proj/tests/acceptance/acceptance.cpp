// Acceptance checks: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "../support/program_gen.hpp"
#include "oracles.hpp"
#include "qrtree/bitstream.hpp"
#include "qrtree/codec.hpp"
#include "qrtree/datatypes.hpp"
#include "qrtree/dictionary.hpp"
#include "qrtree/error.hpp"
#include "qrtree/float16.hpp"
#include "qrtree/header.hpp"
#include "qrtree/ir.hpp"
#include "qrtree/qr_symbol.hpp"
#include "qrtree/qrio.hpp"
#include "qrtree/vm.hpp"

using namespace qrtree;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr double kExpSeconds = 1.0;
constexpr double kFuzzSeconds = 60.0;
constexpr double kLengthTolerance = 0.03;  // relative, around 5704 bits
constexpr double kFractionTolerance = 1.0;  // percentage points, around 24.1%
constexpr std::size_t kPaperBits = 5704;
constexpr double kPaperFraction = 24.1;
constexpr double kCapacityBits = 23624.0;

class Check {
public:
    explicit Check(std::ostringstream& log) : log_(log) {}
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            failed_ = true;
            log_ << "    " << what << '\n';
        }
    }
    bool failed() const { return failed_; }

private:
    std::ostringstream& log_;
    bool failed_ = false;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Program appendix_b() { return assemble(oracle::read_file(fixture("appendix_b.qrt"))); }

void exp_encoding(Check& c) {
    const std::pair<std::uint64_t, const char*> table[] = {
        {12, "1100"},
        {14, "1110"},
        {15, "1111 0000"},
        {120, "1111 1111 01011010"},
        {300, "1111 1111 11111111 0000000000001111"},
    };
    for (const auto& [v, bits] : table) {
        c.expect(encode_exp(v, 4).to_string() == oracle::strip(bits), "table vector " + std::to_string(v));
    }
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t v = rng() & 0xFFFFFFFFu;
        const unsigned n0 = 1 + static_cast<unsigned>(rng() % 8);
        const BitString s = encode_exp(v, n0);
        BitReader r(s);
        if (decode_exp(r, n0) != v || !r.at_end() || s.size() != exp_length(v, n0)) {
            c.expect(false, "round trip " + std::to_string(v) + " n0=" + std::to_string(n0));
            break;
        }
    }
    const double t = seconds_since(start);
    c.expect(t < kExpSeconds, "runtime " + std::to_string(t) + " s");
}

void appendix_golden(Check& c) {
    const Program p = appendix_b();
    c.expect(p.instructions.size() == 23, "23 instructions");
    const Program relisted = assemble(print_ir(p));
    c.expect(relisted == p, "print_ir/assemble structurally identical");
    const auto bytes = encode_program(p, {});
    const Program back = decode_program(bytes, {});
    c.expect(back.instructions == p.instructions && back.headers.tree == p.headers.tree,
             "disassembled program identical");
    const std::string bits = BitString::from_bytes(bytes).to_string();
    c.expect(bits.substr(0, 18) == oracle::strip("001 0 0000 0 0000 0001 0"), "header prefix " + bits.substr(0, 18));
    const double length = static_cast<double>(bytes.size() * 8);
    c.expect(std::abs(length - kPaperBits) <= kLengthTolerance * kPaperBits,
             "length " + std::to_string(bytes.size() * 8));
    const double fraction = 100.0 * length / kCapacityBits;
    c.expect(std::abs(fraction - kPaperFraction) <= kFractionTolerance, "fraction " + std::to_string(fraction));
}

std::vector<std::string> trace(const Program& p, std::vector<std::string> answers, std::vector<std::uint64_t>* refs) {
    ScriptedHost host(std::move(answers));
    run(p, {}, host);
    std::vector<std::string> out;
    for (const auto& o : host.outputs()) {
        if (const auto* r = std::get_if<Reference>(&o); r && refs) refs->push_back(r->id);
        out.push_back(render(o));
    }
    return out;
}

void vm_scenarios(Check& c) {
    const Program p = appendix_b();
    const std::string low1 = "The person has a heart beat rate too low. You should call an ambulance.";
    struct Scenario {
        std::vector<std::string> answers;
        std::size_t outputs;
        std::string last;
        bool low;
    };
    const Scenario scenarios[] = {
        {{"4", "Yes"}, 5, "Great! Wait for the ambulance and keep the patient awake.", true},
        {{"4", "No"}, 5,
         "Keep alternating between 2-3 minutes of cardiac massage and defibrillator charges until the ambulance "
         "arrives.",
         true},
        {{"7"}, 2, "If they don't feel better after a couple of minutes it's better to call an ambulance.", false},
        {{"35"}, 2, "If they don't feel better after a couple of minutes it's better to call an ambulance.", false},
        {{"12"}, 1, "The heart beat is normal.", false},
    };
    for (const auto& s : scenarios) {
        const std::string name = s.answers[0] + (s.answers.size() > 1 ? "/" + s.answers[1] : "");
        std::vector<std::uint64_t> refs;
        const auto out = trace(p, s.answers, &refs);
        c.expect(out.size() == s.outputs && !out.empty() && out.back() == s.last, name + " final output");
        if (s.low) {
            c.expect(out.front() == low1, name + " low branch");
            c.expect(refs == std::vector<std::uint64_t>{1, 2}, name + " references 1 and 2");
        } else {
            c.expect(refs.empty(), name + " no references");
        }
        c.expect(trace(p, s.answers, nullptr) == out, name + " deterministic");
    }
    const auto slow = trace(p, {"7"}, nullptr);
    c.expect(!slow.empty() && slow[0] == "The person has a slightly low heart beat. Sit them down.", "7 branch");
    const auto high = trace(p, {"35"}, nullptr);
    c.expect(!high.empty() &&
                 high[0] == "The person has a very high heart rate. Lay them down and make them do deep breaths.",
             "35 branch");
}

std::optional<std::string> scope_cell(const DictConfig& config, DictScope scope) {
    try {
        return scope_bits(config, scope).to_string();
    } catch (const Error&) {
        return std::nullopt;
    }
}

void dictionary_matrix(Check& c) {
    struct Row {
        bool g, s, l;
        const char* cells[3];
    };
    const Row rows[] = {
        {true, true, true, {"00", "01", "1"}},  {false, false, false, {"-", "-", "-"}},
        {true, false, true, {"0", "-", "1"}},   {false, true, true, {"-", "0", "1"}},
        {true, true, false, {"0", "1", "-"}},   {true, false, false, {"", "-", "-"}},
        {false, true, false, {"-", "", "-"}},   {false, false, true, {"-", "-", ""}},
    };
    const DictScope scopes[] = {DictScope::Global, DictScope::Specific, DictScope::Local};
    for (const Row& row : rows) {
        DictConfig config;
        config.global_enabled = row.g;
        config.spec_enabled = row.s;
        config.local_enabled = row.l;
        for (int k = 0; k < 3; ++k) {
            const std::string want = row.cells[k];
            const auto got = scope_cell(config, scopes[k]);
            const bool ok = want == "-" ? !got : got && *got == want;
            c.expect(ok, "scope row " + std::to_string(row.g) + std::to_string(row.s) + std::to_string(row.l));
        }
    }

    const std::pair<DictTypes, const char*> types[] = {
        {{false, false}, "1 011 00 000"},
        {{false, true}, "1 011 01 000"},
        {{true, false}, "1 011 10 000"},
        {{true, true}, "1 000"},
    };
    for (const auto& [t, bits] : types) {
        QrtreeHeader h;
        h.dict_types = t;
        const BitString encoded = encode_qrtree_header(h);
        BitReader r(encoded);
        const auto back = decode_qrtree_header(r, {});
        const DictTypes got = back ? back->dict_types.value_or(DictTypes{}) : DictTypes{};
        c.expect(encoded.to_string() == oracle::strip(bits) && got.global == t.global && got.specific == t.specific,
                 std::string("dict types ") + bits);
    }

    c.expect(index_width(23) == 5, "index_width(23)");

    DictConfig global;
    global.global = load_dictionary_file(fixture("appendix_a.json"));
    global.default_language = "en";
    global.active_language = "en";
    c.expect(resolve_word(global, DictScope::Global, 0) == "Yes", "(en, 0)");
    global.active_language = "it";
    c.expect(resolve_word(global, DictScope::Global, 1) == "No", "(it, 1)");

    DictConfig local;
    local.local_enabled = true;
    local.default_language = "en";
    local.local_languages = {"it"};
    local.locals[0] = {"Yes", "No"};
    local.locals[1] = {"Si", ""};
    local.active_language = "it";
    c.expect(resolve_word(local, DictScope::Local, 1) == "No", "empty-word fallback");
}

void fuzz_round_trip(Check& c) {
    const DictionaryStore store = gen::fuzz_store();
    gen::ProgramGenerator g(99);
    const auto start = Clock::now();
    for (int i = 0; i < 10000; ++i) {
        const Program p = g.program();
        try {
            const auto first = encode_program(p, store);
            const auto second = encode_program(decode_program(first, store), store);
            if (first != second) {
                c.expect(false, "program " + std::to_string(i) + " re-encodes differently");
                break;
            }
        } catch (const Error& e) {
            c.expect(false, "program " + std::to_string(i) + ": " + e.what());
            break;
        }
    }
    const double t = seconds_since(start);
    c.expect(t < kFuzzSeconds, "runtime " + std::to_string(t) + " s");
}

void continuation(Check& c) {
    std::mt19937 rng(7);
    const std::size_t cap = byte_capacity(10, EcLevel::Low);
    for (double factor : {1.0, 2.5, 5.0}) {
        const std::string name = std::to_string(factor).substr(0, 3) + "x";
        Bytes raw(static_cast<std::size_t>(cap * factor));
        for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
        const BitString payload = BitString::from_bytes(raw);
        auto frames = split_with_continuation(payload, cap);
        c.expect(frames.size() >= 2, name + " splits");
        c.expect(std::all_of(frames.begin(), frames.end(), [&](const Bytes& f) { return f.size() <= cap; }),
                 name + " fits");
        for (int t = 0; t < 5; ++t) {
            std::shuffle(frames.begin(), frames.end(), rng);
            c.expect(reassemble(frames) == payload, name + " shuffled reassembly");
        }
        std::vector<Bytes> partial;
        std::vector<std::uint64_t> dropped;
        for (const auto& f : frames) {
            const auto seq = decode_frame(f).continuation->sequence_number;
            if (seq % 2 == 1) {
                dropped.push_back(seq);
            } else {
                partial.push_back(f);
            }
        }
        std::sort(dropped.begin(), dropped.end());
        try {
            reassemble(partial);
            c.expect(false, name + " missing chunks undetected");
        } catch (const IncompleteSetError& e) {
            c.expect(e.missing() == dropped, name + " missing sequence numbers");
        }
    }
}

void fp_exhaustive(Check& c) {
    std::size_t bad = 0;
    for (std::uint32_t h = 0; h <= 0xFFFF; ++h) {
        const auto c16 = NumericConstant::from_bits(NumericKind::Fp16, h);
        BitWriter w;
        encode_number(w, c16);
        BitReader r(w.bits());
        const auto back = decode_number(r, NumericKind::Fp16);
        if (back.bits() != h || half_from_float(half_to_float(static_cast<std::uint16_t>(h))) != h) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " half patterns differ");
    std::mt19937 rng(32);
    bad = 0;
    for (int i = 0; i < 100000; ++i) {
        const std::uint32_t bits = rng();
        BitWriter w;
        encode_number(w, NumericConstant::from_bits(NumericKind::Fp32, bits));
        BitReader r(w.bits());
        if (decode_number(r, NumericKind::Fp32).bits() != bits) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " single patterns differ");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
        {"exponential encoding vectors and round trip", exp_encoding},
        {"appendix program golden encoding", appendix_golden},
        {"interpreter scenarios", vm_scenarios},
        {"dictionary matrix", dictionary_matrix},
        {"randomized program round trip", fuzz_round_trip},
        {"continuation split and reassembly", continuation},
        {"floating point bit patterns", fp_exhaustive},
    };
    int failures = 0;
    for (const auto& [name, body] : criteria) {
        std::ostringstream log;
        Check check(log);
        const auto start = Clock::now();
        try {
            body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double t = seconds_since(start);
        std::printf("[%s] %s (%.2f s)\n", check.failed() ? "FAIL" : "PASS", name, t);
        if (check.failed()) {
            std::cout << log.str();
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
