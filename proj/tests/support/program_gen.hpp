// Random valid programs for round-trip fuzzing.
#pragma once

#include <random>
#include <string>

#include "qrtree/dictionary.hpp"
#include "qrtree/header.hpp"
#include "qrtree/program.hpp"

namespace gen {

// Global: 4 words in two languages; specific: two dictionaries of 5 and 3 words.
inline qrtree::DictionaryStore fuzz_store() {
    qrtree::DictionaryStore store;
    store.global = {{"en", {"Yes", "No", "Cancel", "Ok"}}, {"it", {"Si", "No"}}};
    store.specific = {{{"en", {"pulse", "breath", "burn", "cut", "fall"}}},
                      {{"en", {"red", "green", "blue"}}}};
    store.default_language = "en";
    store.active_language = "en";
    store.local_languages = {"it", "fr"};
    return store;
}

class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

    qrtree::Program program(std::size_t max_instructions = 24) {
        qrtree::Program p;
        if (coin()) p.headers.script.url = "https://qr.example/" + std::to_string(pick(1000));
        if (pick(4) != 0) p.headers.tree = tree();
        const auto config = qrtree::make_dict_config(fuzz_store(), p.headers.tree);
        const std::size_t n = pick(max_instructions + 1);
        for (std::size_t i = 0; i < n; ++i) p.instructions.push_back(instruction(p.headers, config, n - i - 1));
        return p;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    bool coin() { return rng_() & 1; }

    qrtree::QrtreeHeader tree() {
        using namespace qrtree;
        QrtreeHeader t;
        if (coin()) t.int_width = coin() ? IntWidth::Int32 : IntWidth::Int16;
        if (coin()) t.float_width = coin() ? FloatWidth::Fp32 : FloatWidth::Fp16;
        if (pick(3) == 0) {
            // Both scopes on is the default and has no encoding of its own.
            const DictTypes types{coin(), coin()};
            if (!(types.global && types.specific)) t.dict_types = types;
        }
        for (std::size_t k = pick(3); k > 0; --k) t.spec_indices.push_back(pick(2));
        for (std::size_t k = pick(3); k > 0; --k) {
            LocalDictionary d;
            d.language = pick(3);
            for (std::size_t w = 1 + pick(5); w > 0; --w) d.words.push_back(text());
            t.local_dicts.push_back(d);
        }
        return t;
    }

    qrtree::StringConstant text() {
        static const char* const samples[] = {"", "a", "Yes", "Call 112", "Tachycardia?",
                                              "The heart beat is normal."};
        std::string s = samples[pick(6)];
        for (std::size_t k = pick(6); k > 0; --k) s.push_back(static_cast<char>(' ' + pick(95)));
        if (pick(3) == 0) {
            static const char* const wide[] = {"\xC3\xA8", "\xE2\x82\xAC", "\xF0\x9F\x9A\x91", "\xC3\x9F"};
            s += wide[pick(4)];
            return qrtree::StringConstant::utf8(s);
        }
        return pick(5) == 0 ? qrtree::StringConstant::utf8(s) : qrtree::StringConstant::ascii7(s);
    }

    qrtree::Operand operand(const qrtree::DictConfig& config) {
        using namespace qrtree;
        switch (pick(4)) {
            case 0:
                return Reference{pick(4) == 0 ? rng_() >> pick(64) : pick(20)};
            case 1: {
                std::vector<DictScope> usable;
                for (DictScope s : {DictScope::Global, DictScope::Specific, DictScope::Local}) {
                    if (config.enabled(s) && config.word_count(s) > 0) usable.push_back(s);
                }
                if (usable.empty()) return text();
                const DictScope s = usable[pick(usable.size())];
                return StringConstant::dict(s, pick(config.word_count(s)));
            }
            default:
                return text();
        }
    }

    qrtree::NumericConstant number(const qrtree::HeaderSet& headers) {
        using namespace qrtree;
        const auto ints = declared_integer_kind(headers);
        const auto reals = declared_real_kind(headers);
        const bool integer = coin();
        NumericKind kind;
        if (integer) {
            kind = ints ? *ints : (coin() ? NumericKind::Int16 : NumericKind::Int32);
        } else {
            kind = reals ? *reals : (coin() ? NumericKind::Fp16 : NumericKind::Fp32);
        }
        switch (kind) {
            case NumericKind::Int16:
                return NumericConstant::int16(static_cast<std::int16_t>(rng_()));
            case NumericKind::Int32:
                return NumericConstant::int32(static_cast<std::int32_t>(rng_()));
            case NumericKind::Fp16:
                return NumericConstant::from_bits(kind, static_cast<std::uint16_t>(rng_()));
            case NumericKind::Fp32:
                return NumericConstant::from_bits(kind, static_cast<std::uint32_t>(rng_()));
        }
        return {};
    }

    qrtree::Instruction instruction(const qrtree::HeaderSet& headers, const qrtree::DictConfig& config,
                                    std::size_t max_jump) {
        using namespace qrtree;
        const std::uint64_t jump = pick(max_jump + 1);
        switch (pick(7)) {
            case 0: return Instruction::input(operand(config));
            case 1: return Instruction::inputs(operand(config));
            case 2: return Instruction::print(operand(config));
            case 3: return Instruction::printex(operand(config));
            case 4: return Instruction::go_to(jump);
            case 5: return Instruction::if_equal(operand(config), jump);
            default:
                return Instruction::ifc(static_cast<RelOp>(pick(6)), number(headers), jump);
        }
    }

    std::mt19937_64 rng_;
};

}  // namespace gen
