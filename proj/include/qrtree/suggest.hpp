#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qrtree/dictionary.hpp"
#include "qrtree/program.hpp"

namespace qrtree {

struct LocalSuggestion {
    std::vector<std::string> words;  // in index order
    long saved_bits = 0;             // exact change of the encoded stream length
};

// Picks inline strings worth moving into a new default-language DICT_LOCAL command.
// Counts exact bit lengths: every replaced occurrence, the words stored in the
// header, the command itself, and the extra scope bit other DICT strings pay once
// local dictionaries are enabled. Ties go to the string seen first.
LocalSuggestion suggest_local_dictionary(const Program& program, const DictionaryStore& store,
                                         std::size_t max_words);

// Adds `words` as a DICT_LOCAL command for language 0 and replaces matching inline
// strings with references to it.
Program apply_local_dictionary(const Program& program, const std::vector<std::string>& words);

}  // namespace qrtree
