#include "qrtree/suggest.hpp"

#include <algorithm>
#include <map>

#include "qrtree/datatypes.hpp"
#include "qrtree/header.hpp"

namespace qrtree {
namespace {

constexpr unsigned kCommandBits = 3;
constexpr unsigned kExpBase = 4;

const StringConstant* string_operand(const Instruction& ins) {
    if (!ins.has_operand()) return nullptr;
    return std::get_if<StringConstant>(&ins.operand);
}

StringEncoding word_encoding(const std::string& text) {
    return is_ascii7(text) ? StringEncoding::Ascii7 : StringEncoding::Utf8;
}

std::size_t stored_word_bits(const std::string& text) {
    BitWriter w;
    encode_text_payload(w, word_encoding(text), text);
    return 1 + w.size();
}

struct Candidate {
    std::string text;
    std::size_t first_seen = 0;
    std::size_t occurrences = 0;
    std::size_t inline_bits = 0;  // summed over occurrences
};

}  // namespace

LocalSuggestion suggest_local_dictionary(const Program& program, const DictionaryStore& store,
                                         std::size_t max_words) {
    const DictConfig dicts = make_dict_config(store, program.headers.tree);
    const bool other_scopes = dicts.global_enabled || dicts.spec_enabled;
    const unsigned local_scope_bits = other_scopes ? 1 : 0;
    // Index width follows the longest language; new words extend language 0.
    std::size_t default_words = 0;
    std::size_t longest_other = 0;
    for (const auto& [language, words] : dicts.locals) {
        if (language == 0) {
            default_words = words.size();
        } else {
            longest_other = std::max(longest_other, words.size());
        }
    }

    std::map<std::string, Candidate> by_text;
    std::size_t other_dict_refs = 0;
    std::size_t local_refs = 0;
    std::size_t order = 0;
    for (const Instruction& ins : program.instructions) {
        const StringConstant* s = string_operand(ins);
        if (!s) continue;
        if (s->is_dict()) {
            (s->scope() == DictScope::Local ? local_refs : other_dict_refs) += 1;
            continue;
        }
        auto [it, inserted] = by_text.try_emplace(s->text());
        Candidate& c = it->second;
        if (inserted) {
            c.text = s->text();
            c.first_seen = order++;
        }
        ++c.occurrences;
        c.inline_bits += encoded_string_length(*s, dicts);
    }
    std::vector<Candidate> candidates;
    for (auto& [text, c] : by_text) candidates.push_back(std::move(c));
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.first_seen < b.first_seen; });

    long fixed = kCommandBits + exp_length(0, 3);
    if (!program.headers.tree) fixed += kCommandBits;  // HEADER_END
    if (!dicts.local_enabled && other_scopes) fixed += static_cast<long>(other_dict_refs);

    LocalSuggestion best;
    const std::size_t limit = std::min(max_words, candidates.size());
    for (std::size_t k = 1; k <= limit; ++k) {
        const unsigned width = index_width(std::max(default_words + k, longest_other));
        const std::size_t old_count = std::max(default_words, longest_other);
        const unsigned old_width = old_count ? index_width(old_count) : 0;
        auto saving = [&](const Candidate& c) {
            const long ref_bits = 2 + local_scope_bits + width;
            return static_cast<long>(c.inline_bits) -
                   static_cast<long>(c.occurrences) * ref_bits -
                   static_cast<long>(stored_word_bits(c.text));
        };
        std::vector<const Candidate*> ranked;
        for (const auto& c : candidates) ranked.push_back(&c);
        std::stable_sort(ranked.begin(), ranked.end(), [&](const Candidate* a, const Candidate* b) {
            return saving(*a) > saving(*b);
        });
        long total = -fixed - static_cast<long>(exp_length(k, kExpBase)) -
                     static_cast<long>(local_refs) * static_cast<long>(width - old_width);
        bool all_positive = true;
        for (std::size_t i = 0; i < k; ++i) {
            const long s = saving(*ranked[i]);
            all_positive = all_positive && s > 0;
            total += s;
        }
        if (!all_positive || total <= best.saved_bits) continue;
        best.saved_bits = total;
        best.words.clear();
        for (std::size_t i = 0; i < k; ++i) best.words.push_back(ranked[i]->text);
    }
    return best;
}

Program apply_local_dictionary(const Program& program, const std::vector<std::string>& words) {
    Program out = program;
    if (words.empty()) return out;
    if (!out.headers.tree) out.headers.tree.emplace();
    std::size_t base = 0;
    for (const auto& local : out.headers.tree->local_dicts) {
        if (local.language == 0) base += local.words.size();
    }
    LocalDictionary local;
    std::map<std::string, std::size_t> index;
    for (const auto& w : words) {
        index.emplace(w, base + local.words.size());
        local.words.push_back(word_encoding(w) == StringEncoding::Ascii7 ? StringConstant::ascii7(w)
                                                                          : StringConstant::utf8(w));
    }
    out.headers.tree->local_dicts.push_back(std::move(local));
    for (Instruction& ins : out.instructions) {
        const StringConstant* s = string_operand(ins);
        if (!s || s->is_dict()) continue;
        if (auto it = index.find(s->text()); it != index.end()) {
            ins.operand = StringConstant::dict(DictScope::Local, it->second);
        }
    }
    return out;
}

}  // namespace qrtree
