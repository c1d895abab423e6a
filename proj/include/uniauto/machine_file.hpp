#pragma once

#include <string>
#include <variant>

#include "uniauto/automata.hpp"
#include "uniauto/transducers.hpp"

namespace uniauto {

using AnyMachine = std::variant<Nfa, Pda, Fst, Pdt, TwoWayFst, TwoWayPdt>;

struct ParseError : InputError {
    std::size_t line;
    ParseError(const std::string& what, std::size_t line_number)
        : InputError(what + ", line " + std::to_string(line_number)), line(line_number)
    {
    }
};

/// Parses the line-oriented machine format:
///
///     machine <name>
///     type nfa|pda|fst|pdt|2fst|2pdt
///     states <n>
///     final <i> <j> ...
///     input <symbols...>
///     stack $ <symbols...>        (pushdown types)
///     output <symbols...>         (transducers)
///     t <from> <input> [<output>] [<pop> <push>] [L|R|M] <to>
///     end
///
/// Tokens are separated by whitespace. `_` is λ (the empty string in
/// output, pop and push fields); `#` at the start of a line or after
/// whitespace starts a comment. `\#`, `\_` and `\\` escape those
/// characters. Throws ParseError.
AnyMachine parse_machine(const std::string& text);

/// Inverse of parse_machine.
std::string print_machine(const AnyMachine& m);

std::string type_name(const AnyMachine& m);

}  // namespace uniauto
