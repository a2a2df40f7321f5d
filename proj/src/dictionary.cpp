#include "qrtree/dictionary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "json.hpp"

#include "qrtree/error.hpp"

namespace qrtree {
namespace {

using nlohmann::json;

Dictionary parse_entry(const json& entry, std::size_t position) {
    const std::string where = "dictionary entry " + std::to_string(position);
    if (!entry.is_object()) {
        throw Error(ErrorKind::Schema, where + ": expected an object");
    }
    const auto language = entry.find("language");
    if (language == entry.end() || !language->is_string()) {
        throw Error(ErrorKind::Schema, where + ": 'language' must be a string");
    }
    Dictionary dict;
    dict.language = language->get<std::string>();
    if (dict.language.size() < 2) {
        throw Error(ErrorKind::Schema,
                    where + ": language '" + dict.language + "' is shorter than 2 characters");
    }
    const auto words = entry.find("words");
    if (words == entry.end() || !words->is_array()) {
        throw Error(ErrorKind::Schema, where + ": 'words' must be an array");
    }
    for (std::size_t i = 0; i < words->size(); ++i) {
        const json& word = (*words)[i];
        if (!word.is_string()) {
            throw Error(ErrorKind::Schema,
                        where + ": word " + std::to_string(i) + " is not a string");
        }
        dict.words.push_back(word.get<std::string>());
    }
    return dict;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fetch_source(const std::string& source, const std::filesystem::path& base_dir) {
    constexpr std::string_view kHttp = "http://";
    if (source.rfind(kHttp, 0) == 0) {
        const auto slash = source.find('/', kHttp.size());
        const std::string host = source.substr(0, slash);
        const std::string target = slash == std::string::npos ? "/" : source.substr(slash);
        httplib::Client client(host);
        auto res = client.Get(target);
        if (!res || res->status != 200) {
            throw Error(ErrorKind::Io, "cannot fetch dictionary from " + source);
        }
        return res->body;
    }
    std::filesystem::path path = source;
    if (source.rfind("file://", 0) == 0) path = source.substr(7);
    if (path.is_relative()) path = base_dir / path;
    return read_text_file(path);
}

const Dictionary* find_language(const MultilingualDictionary& dict, const std::string& lang) {
    if (lang.empty()) return nullptr;
    auto it = std::find_if(dict.begin(), dict.end(),
                           [&](const Dictionary& d) { return d.language == lang; });
    return it == dict.end() ? nullptr : &*it;
}

std::size_t max_words(const MultilingualDictionary& dict) {
    std::size_t n = 0;
    for (const auto& d : dict) n = std::max(n, d.words.size());
    return n;
}

// Active language first, then default, then first defined; a language whose list
// is too short for `index` is skipped.
std::string pick_word(const MultilingualDictionary& dict, const DictConfig& config,
                      std::size_t index) {
    const Dictionary* candidates[] = {
        find_language(dict, config.active_language),
        find_language(dict, config.default_language),
        dict.empty() ? nullptr : &dict.front(),
    };
    for (const Dictionary* d : candidates) {
        if (d != nullptr && index < d->words.size()) return d->words[index];
    }
    throw Error(ErrorKind::InvalidArgument,
                "dictionary index " + std::to_string(index) + " out of range");
}

std::uint64_t active_local_number(const DictConfig& config) {
    if (config.active_language.empty() || config.active_language == config.default_language) {
        return 0;
    }
    const auto& names = config.local_languages;
    auto it = std::find(names.begin(), names.end(), config.active_language);
    return it == names.end() ? 0 : static_cast<std::uint64_t>(it - names.begin()) + 1;
}

std::string resolve_local(const DictConfig& config, std::size_t index) {
    if (config.locals.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no local dictionary defined");
    }
    auto lookup = [&](std::uint64_t language) -> const std::string* {
        auto it = config.locals.find(language);
        if (it == config.locals.end() || index >= it->second.size()) return nullptr;
        return &it->second[index];
    };
    const std::string* base = lookup(0);
    if (base == nullptr) {
        // No default-language entry: the first local dictionary defined stands in.
        const auto& first = config.locals.begin()->second;
        if (index < first.size()) base = &first[index];
    }
    const std::uint64_t language = active_local_number(config);
    if (language != 0) {
        const std::string* word = lookup(language);
        // An empty word in a non-default language prints the default word instead.
        if (word != nullptr && (!word->empty() || base == nullptr)) return *word;
    }
    if (base == nullptr) {
        throw Error(ErrorKind::InvalidArgument,
                    "local dictionary index " + std::to_string(index) + " out of range");
    }
    return *base;
}

}  // namespace

const char* to_string(DictScope scope) {
    switch (scope) {
        case DictScope::Global: return "global";
        case DictScope::Specific: return "specific";
        case DictScope::Local: return "local";
    }
    return "?";
}

std::vector<Dictionary> load_dictionary_document(const nlohmann::json& doc) {
    std::vector<Dictionary> out;
    if (doc.is_array()) {
        for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(parse_entry(doc[i], i));
    } else {
        out.push_back(parse_entry(doc, 0));
    }
    return out;
}

std::vector<Dictionary> parse_dictionary_document(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
    }
    return load_dictionary_document(doc);
}

std::vector<Dictionary> load_dictionary_file(const std::filesystem::path& path) {
    return parse_dictionary_document(read_text_file(path));
}

DictionaryStore DictionaryStore::load_config(const std::filesystem::path& path) {
    json config;
    try {
        config = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, path.string() + ": invalid JSON: " + e.what());
    }
    return from_config_json(config, path.parent_path());
}

DictionaryStore DictionaryStore::from_config_json(const nlohmann::json& config,
                                                  const std::filesystem::path& base_dir) {
    if (!config.is_object()) {
        throw Error(ErrorKind::Schema, "toolchain config must be a JSON object");
    }
    auto string_field = [&](const char* name) -> std::string {
        auto it = config.find(name);
        if (it == config.end() || it->is_null()) return {};
        if (!it->is_string()) {
            throw Error(ErrorKind::Schema, std::string("config '") + name + "' must be a string");
        }
        return it->get<std::string>();
    };
    DictionaryStore store;
    if (const std::string global = string_field("global"); !global.empty()) {
        store.global = parse_dictionary_document(fetch_source(global, base_dir));
    }
    if (auto it = config.find("specific"); it != config.end()) {
        if (!it->is_array()) throw Error(ErrorKind::Schema, "config 'specific' must be an array");
        for (const auto& src : *it) {
            if (!src.is_string()) {
                throw Error(ErrorKind::Schema, "config 'specific' entries must be strings");
            }
            store.specific.push_back(
                parse_dictionary_document(fetch_source(src.get<std::string>(), base_dir)));
        }
    }
    if (auto it = config.find("local_languages"); it != config.end()) {
        if (!it->is_array()) {
            throw Error(ErrorKind::Schema, "config 'local_languages' must be an array");
        }
        for (const auto& name : *it) store.local_languages.push_back(name.get<std::string>());
    }
    store.default_language = string_field("default_language");
    store.active_language = string_field("active_language");
    return store;
}

bool DictConfig::enabled(DictScope scope) const {
    switch (scope) {
        case DictScope::Global: return global_enabled;
        case DictScope::Specific: return spec_enabled;
        case DictScope::Local: return local_enabled;
    }
    return false;
}

std::size_t DictConfig::word_count(DictScope scope) const {
    switch (scope) {
        case DictScope::Global: return max_words(global);
        case DictScope::Specific: {
            std::size_t n = 0;
            for (const auto& d : specific_order) n += max_words(d);
            return n;
        }
        case DictScope::Local: {
            std::size_t n = 0;
            for (const auto& [language, words] : locals) n = std::max(n, words.size());
            return n;
        }
    }
    return 0;
}

BitString scope_bits(const DictConfig& config, DictScope scope) {
    if (!config.enabled(scope)) {
        throw Error(ErrorKind::Encode,
                    std::string("dictionary scope '") + to_string(scope) + "' is disabled");
    }
    // Local takes "1" when anything else is enabled; global and specific share the
    // "0" branch and split it with one more bit when both are enabled.
    BitString bits;
    if (config.local_enabled && (config.global_enabled || config.spec_enabled)) {
        bits.push_back(scope == DictScope::Local);
    }
    if (scope != DictScope::Local && config.global_enabled && config.spec_enabled) {
        bits.push_back(scope == DictScope::Specific);
    }
    return bits;
}

DictScope read_scope(BitReader& in, const DictConfig& config) {
    if (!config.any_enabled()) {
        throw StreamError(ErrorKind::MalformedStream, "DICT string with every dictionary disabled",
                          in.position());
    }
    const bool others = config.global_enabled || config.spec_enabled;
    if (config.local_enabled) {
        if (!others || in.read_bit()) return DictScope::Local;
    }
    if (config.global_enabled && config.spec_enabled) {
        return in.read_bit() ? DictScope::Specific : DictScope::Global;
    }
    return config.global_enabled ? DictScope::Global : DictScope::Specific;
}

unsigned index_width(std::size_t word_count) {
    if (word_count == 0) {
        throw Error(ErrorKind::InvalidArgument, "a dictionary needs at least one word");
    }
    unsigned width = 0;
    while (width < 64 && (std::size_t{1} << width) < word_count) ++width;
    return width;
}

std::string resolve_word(const DictConfig& config, DictScope scope, std::size_t index) {
    if (!config.enabled(scope)) {
        throw Error(ErrorKind::InvalidArgument,
                    std::string("dictionary scope '") + to_string(scope) + "' is disabled");
    }
    switch (scope) {
        case DictScope::Global:
            return pick_word(config.global, config, index);
        case DictScope::Specific: {
            std::size_t offset = index;
            for (const auto& dict : config.specific_order) {
                const std::size_t n = max_words(dict);
                if (offset < n) return pick_word(dict, config, offset);
                offset -= n;
            }
            throw Error(ErrorKind::InvalidArgument,
                        "specific dictionary index " + std::to_string(index) + " out of range");
        }
        case DictScope::Local:
            return resolve_local(config, index);
    }
    return {};
}

}  // namespace qrtree
