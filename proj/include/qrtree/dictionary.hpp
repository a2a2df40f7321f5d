#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qrtree/bitstream.hpp"

namespace qrtree {

enum class DictScope { Global, Specific, Local };

const char* to_string(DictScope scope);

// One language of a dictionary. Word order is significant: the index of a word
// is its position, starting at 0.
struct Dictionary {
    std::string language;
    std::vector<std::string> words;

    friend bool operator==(const Dictionary&, const Dictionary&) = default;
};

// The same dictionary in several languages.
using MultilingualDictionary = std::vector<Dictionary>;

// Accepts a single {language, words} object or an array of them.
std::vector<Dictionary> load_dictionary_document(const nlohmann::json& doc);
std::vector<Dictionary> parse_dictionary_document(std::string_view json_text);
std::vector<Dictionary> load_dictionary_file(const std::filesystem::path& path);

// Dictionaries the application ships with, plus its language settings.
struct DictionaryStore {
    MultilingualDictionary global;
    std::vector<MultilingualDictionary> specific;  // in load order
    std::string default_language;
    std::string active_language;
    // Local dictionary language number i + 1 maps to local_languages[i]; number 0 is
    // always the default language.
    std::vector<std::string> local_languages;

    // Toolchain config: {"global": src, "specific": [src...], "default_language": ...,
    // "active_language": ..., "local_languages": [...]}. Sources are file paths
    // (relative to the config file) or http:// URLs.
    static DictionaryStore load_config(const std::filesystem::path& path);
    static DictionaryStore from_config_json(const nlohmann::json& config,
                                            const std::filesystem::path& base_dir);
};

// Dictionary state in effect for one program: which scopes are enabled and which
// words each scope resolves to.
struct DictConfig {
    bool global_enabled = true;
    bool spec_enabled = true;
    bool local_enabled = false;

    MultilingualDictionary global;
    std::vector<MultilingualDictionary> specific_order;  // as selected by the header
    std::map<std::uint64_t, std::vector<std::string>> locals;  // language number -> words

    std::string default_language;
    std::string active_language;
    std::vector<std::string> local_languages;

    bool enabled(DictScope scope) const;
    bool any_enabled() const { return global_enabled || spec_enabled || local_enabled; }

    // Number of addressable words; index width is derived from it.
    std::size_t word_count(DictScope scope) const;
};

// Scope selector bits of a DICT string. Empty when the scope is the only enabled one.
// Throws Encode if the scope is disabled.
BitString scope_bits(const DictConfig& config, DictScope scope);
DictScope read_scope(BitReader& in, const DictConfig& config);

// ceil(log2(word_count)); 0 for a single word. Throws InvalidArgument for 0.
unsigned index_width(std::size_t word_count);

// Word `index` of `scope` in the active language, falling back to the default
// language and then to the first language defined.
std::string resolve_word(const DictConfig& config, DictScope scope, std::size_t index);

}  // namespace qrtree
