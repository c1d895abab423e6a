#include "uniauto/symbols.hpp"

#include <algorithm>

namespace uniauto {

Alphabet::Alphabet(std::initializer_list<Symbol> symbols)
{
    for (Symbol s : symbols)
        insert(s);
}

Alphabet::Alphabet(const Word& symbols)
{
    for (Symbol s : symbols)
        insert(s);
}

void Alphabet::insert(Symbol s)
{
    if (s == kLambda)
        throw InputError("λ cannot be a member of an alphabet");
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s)
        symbols_.insert(it, s);
}

bool Alphabet::contains(Symbol s) const
{
    return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

std::size_t Alphabet::index_of(Symbol s) const
{
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s)
        return 0;
    return static_cast<std::size_t>(it - symbols_.begin()) + 1;
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b)
{
    Alphabet out = a;
    for (Symbol s : b)
        out.insert(s);
    return out;
}

bool length_lex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

void sort_length_lex(std::vector<Word>& words)
{
    std::sort(words.begin(), words.end(), length_lex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::string to_utf8(Symbol s)
{
    std::string out;
    auto cp = static_cast<std::uint32_t>(s);
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

std::string to_utf8(const Word& w)
{
    std::string out;
    for (Symbol s : w)
        out += to_utf8(s);
    return out;
}

Word from_utf8(std::string_view text)
{
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        std::uint32_t cp = 0;
        std::size_t extra = 0;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else {
            throw InputError("malformed UTF-8 at byte " + std::to_string(i));
        }
        for (std::size_t k = 1; k <= extra; ++k) {
            if (i + k >= text.size())
                throw InputError("truncated UTF-8 at byte " + std::to_string(i));
            auto cc = static_cast<unsigned char>(text[i + k]);
            if ((cc & 0xC0) != 0x80)
                throw InputError("malformed UTF-8 at byte " + std::to_string(i + k));
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp == 0)
            throw InputError("NUL is reserved for λ");
        out += static_cast<Symbol>(cp);
        i += extra + 1;
    }
    return out;
}

std::string symbol_name(Symbol s)
{
    if (s == kLambda)
        return "λ";
    return to_utf8(s);
}

void require_word_over(const Word& w, const Alphabet& sigma)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!sigma.contains(w[i]))
            throw InputError("symbol '" + symbol_name(w[i]) + "' at position " + std::to_string(i) +
                             " is not in the input alphabet");
    }
}

}  // namespace uniauto
