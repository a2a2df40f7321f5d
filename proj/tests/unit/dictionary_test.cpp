#include <gtest/gtest.h>

#include <optional>

#include "oracles.hpp"
#include "qrtree/dictionary.hpp"
#include "qrtree/error.hpp"
#include "qrtree/header.hpp"

using namespace qrtree;

namespace {

DictConfig scopes(bool g, bool s, bool l) {
    DictConfig c;
    c.global_enabled = g;
    c.spec_enabled = s;
    c.local_enabled = l;
    return c;
}

// nullopt for a disabled scope.
std::optional<std::string> cell(const DictConfig& c, DictScope scope) {
    try {
        return scope_bits(c, scope).to_string();
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct Row {
    bool g, s, l;
    const char* global;
    const char* specific;
    const char* local;
};

// "-" for unusable scopes, "" for the sole enabled one.
constexpr Row kScopeTable[] = {
    {true, true, true, "00", "01", "1"},
    {false, false, false, "-", "-", "-"},
    {true, false, true, "0", "-", "1"},
    {false, true, true, "-", "0", "1"},
    {true, true, false, "0", "1", "-"},
    {true, false, false, "", "-", "-"},
    {false, true, false, "-", "", "-"},
    {false, false, true, "-", "-", ""},
};

std::optional<std::string> expected(const char* text) {
    return std::string(text) == "-" ? std::nullopt : std::optional<std::string>(text);
}

}  // namespace

TEST(ScopeBits, AllEightConfigurations) {
    for (const Row& row : kScopeTable) {
        const DictConfig c = scopes(row.g, row.s, row.l);
        EXPECT_EQ(cell(c, DictScope::Global), expected(row.global)) << row.g << row.s << row.l;
        EXPECT_EQ(cell(c, DictScope::Specific), expected(row.specific)) << row.g << row.s << row.l;
        EXPECT_EQ(cell(c, DictScope::Local), expected(row.local)) << row.g << row.s << row.l;
    }
}

TEST(ScopeBits, PrefixFreeAndDecodable) {
    for (const Row& row : kScopeTable) {
        const DictConfig c = scopes(row.g, row.s, row.l);
        std::vector<std::pair<DictScope, std::string>> codes;
        for (DictScope scope : {DictScope::Global, DictScope::Specific, DictScope::Local}) {
            if (auto bits = cell(c, scope)) codes.emplace_back(scope, *bits);
        }
        for (const auto& [sa, a] : codes) {
            for (const auto& [sb, b] : codes) {
                if (sa != sb) EXPECT_NE(b.rfind(a, 0), 0u) << a << " prefixes " << b;
            }
            const BitString s = BitString::from_string(a);
            BitReader r(s);
            EXPECT_EQ(read_scope(r, c), sa);
            EXPECT_TRUE(r.at_end());
        }
    }
}

TEST(IndexWidth, Examples) {
    EXPECT_EQ(index_width(23), 5u);
    EXPECT_EQ(index_width(1), 0u);
    EXPECT_EQ(index_width(2), 1u);
    EXPECT_EQ(index_width(256), 8u);
    EXPECT_EQ(index_width(257), 9u);
    EXPECT_THROW(index_width(0), Error);
    for (std::size_t n = 1; n < 5000; ++n) {
        const unsigned w = index_width(n);
        ASSERT_GE(std::size_t{1} << w, n);
        if (w > 0) ASSERT_LT(std::size_t{1} << (w - 1), n);
    }
}

TEST(DictionaryDocument, AppendixExampleLoads) {
    const auto dicts = load_dictionary_file(fixture("appendix_a.json"));
    ASSERT_EQ(dicts.size(), 2u);
    EXPECT_EQ(dicts[0], (Dictionary{"en", {"Yes", "No", "Cancel", "Ok"}}));
    EXPECT_EQ(dicts[1], (Dictionary{"it", {"Si", "No"}}));
}

TEST(DictionaryDocument, SingleObject) {
    const auto dicts = parse_dictionary_document(R"({"language": "fr", "words": ["Oui"]})");
    ASSERT_EQ(dicts.size(), 1u);
    EXPECT_EQ(dicts[0].words, std::vector<std::string>{"Oui"});
}

TEST(DictionaryDocument, SchemaErrors) {
    auto kind_of = [](std::string_view text) {
        try {
            parse_dictionary_document(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind_of(R"({"language": "x", "words": []})"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"({"words": ["a"]})"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"({"language": "en", "words": [1]})"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"([{"language": "en", "words": ["a"]}, 3])"), ErrorKind::Schema);
    EXPECT_EQ(kind_of("{not json"), ErrorKind::Schema);
    EXPECT_THROW(load_dictionary_file(fixture("bad_language.json")), Error);
}

TEST(ResolveWord, GlobalLanguages) {
    DictConfig c;
    c.global = load_dictionary_file(fixture("appendix_a.json"));
    c.default_language = "en";
    c.active_language = "en";
    EXPECT_EQ(resolve_word(c, DictScope::Global, 0), "Yes");
    c.active_language = "it";
    EXPECT_EQ(resolve_word(c, DictScope::Global, 0), "Si");
    EXPECT_EQ(resolve_word(c, DictScope::Global, 1), "No");
    // Italian has no third word: the default language fills in.
    EXPECT_EQ(resolve_word(c, DictScope::Global, 2), "Cancel");
    c.active_language = "de";
    EXPECT_EQ(resolve_word(c, DictScope::Global, 3), "Ok");
    c.default_language.clear();
    c.active_language.clear();
    EXPECT_EQ(resolve_word(c, DictScope::Global, 1), "No");
    EXPECT_THROW(resolve_word(c, DictScope::Global, 4), Error);
}

TEST(ResolveWord, SpecificConcatenatesInHeaderOrder) {
    DictConfig c;
    c.specific_order = {{{"en", {"a", "b"}}}, {{"en", {"c"}}}};
    c.default_language = "en";
    EXPECT_EQ(c.word_count(DictScope::Specific), 3u);
    EXPECT_EQ(resolve_word(c, DictScope::Specific, 0), "a");
    EXPECT_EQ(resolve_word(c, DictScope::Specific, 2), "c");
    EXPECT_THROW(resolve_word(c, DictScope::Specific, 3), Error);
}

TEST(ResolveWord, EmptyLocalWordFallsBackToDefault) {
    DictConfig c;
    c.local_enabled = true;
    c.default_language = "en";
    c.local_languages = {"it"};
    c.locals[0] = {"Yes", "No", "Later"};
    c.locals[1] = {"Si", "", "Dopo"};
    c.active_language = "it";
    EXPECT_EQ(resolve_word(c, DictScope::Local, 0), "Si");
    EXPECT_EQ(resolve_word(c, DictScope::Local, 1), "No");
    EXPECT_EQ(resolve_word(c, DictScope::Local, 2), "Dopo");
    c.active_language = "en";
    EXPECT_EQ(resolve_word(c, DictScope::Local, 2), "Later");
    EXPECT_EQ(c.word_count(DictScope::Local), 3u);
}

TEST(ResolveWord, TotalOverValidIndices) {
    const DictionaryStore store = DictionaryStore::load_config(fixture("toolchain.json"));
    QrtreeHeader tree;
    tree.spec_indices = {0};
    const DictConfig c = make_dict_config(store, tree);
    for (DictScope scope : {DictScope::Global, DictScope::Specific}) {
        for (std::size_t i = 0; i < c.word_count(scope); ++i) {
            EXPECT_FALSE(resolve_word(c, scope, i).empty());
        }
    }
}

TEST(DictionaryStore, LoadsToolchainConfig) {
    const DictionaryStore store = DictionaryStore::load_config(fixture("toolchain.json"));
    EXPECT_EQ(store.global.size(), 2u);
    ASSERT_EQ(store.specific.size(), 1u);
    EXPECT_EQ(store.default_language, "en");
    EXPECT_EQ(store.local_languages, std::vector<std::string>{"it"});
}
