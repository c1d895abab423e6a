#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uniauto {

/// One atom of an alphabet: a Unicode code point.
using Symbol = char32_t;

/// A finite word. The empty word is the empty string.
using Word = std::u32string;

/// Reserved atom for an empty component (λ). Never a member of an alphabet.
inline constexpr Symbol kLambda = U'\0';

/// Stack bottom symbol.
inline constexpr Symbol kBottom = U'$';

using State = int;

/// An ordered, duplicate-free set of symbols.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<Symbol> symbols);
    explicit Alphabet(const Word& symbols);

    void insert(Symbol s);
    bool contains(Symbol s) const;
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    /// 1-based position of s, 0 if absent.
    std::size_t index_of(Symbol s) const;

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Symbol> symbols_;  // sorted
};

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);

/// Malformed input to an operation: a symbol outside the alphabet, a state
/// out of range, a violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of steps (or stack headroom) before it could
/// decide its question.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Length-lexicographic order on words (shorter first, then by code point).
bool length_lex_less(const Word& a, const Word& b);

void sort_length_lex(std::vector<Word>& words);

std::string to_utf8(const Word& w);
std::string to_utf8(Symbol s);
/// Throws InputError on malformed UTF-8.
Word from_utf8(std::string_view text);

/// Readable form of a single symbol ("λ" for kLambda).
std::string symbol_name(Symbol s);

/// Throws InputError naming the first symbol of w that is not in sigma.
void require_word_over(const Word& w, const Alphabet& sigma);

}  // namespace uniauto
