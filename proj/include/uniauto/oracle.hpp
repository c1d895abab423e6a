#pragma once

#include <vector>

#include "uniauto/automata.hpp"

namespace uniauto {

/// Bounded languages, used as the equality oracle throughout the test
/// suites. Results are in length-lexicographic order.
std::vector<Word> enumerate_language(const Nfa& m, std::size_t max_len);

/// Explores prefixes of length at most max_len, sharing work between words
/// with a common prefix. Throws BudgetExhausted if more than limits.budget
/// configurations are visited or a stack exceeds the cap (default cap
/// 2*max_len + 16).
std::vector<Word> enumerate_language(const Pda& m, std::size_t max_len, const SearchLimits& limits = {1000000, 0});

/// Words of the set whose length is at most max_len, sorted length-lex.
std::vector<Word> enumerate_language(const std::vector<Word>& words, std::size_t max_len);

struct EqualityResult {
    bool equal = true;
    /// Length-lex least word on which membership differs (valid when !equal).
    Word counterexample;
};

/// Compares two finite word sets, both sorted length-lex.
EqualityResult compare_word_sets(const std::vector<Word>& a, const std::vector<Word>& b);

/// a and b may each be an Nfa, a Pda or a word set.
template <class A, class B>
EqualityResult languages_equal_upto(const A& a, const B& b, std::size_t max_len)
{
    return compare_word_sets(enumerate_language(a, max_len), enumerate_language(b, max_len));
}

}  // namespace uniauto
