#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "uniauto/symbols.hpp"

namespace uniauto {

/// (from, input-or-λ, to)
struct NfaTransition {
    State from = 1;
    Symbol input = kLambda;
    State to = 1;

    auto operator<=>(const NfaTransition&) const = default;
};

/// Nondeterministic finite automaton with states 1..states; state 1 is
/// initial.
struct Nfa {
    std::string name;
    int states = 1;
    Alphabet input;
    std::vector<NfaTransition> transitions;
    std::set<State> finals;

    bool operator==(const Nfa&) const = default;

    /// Throws InputError if a transition leaves 1..states or uses an
    /// undeclared symbol.
    void validate() const;
    bool has_lambda() const;
};

/// Head movement of a two-way machine: left, right, or stay.
enum class Move { L, R, M };

/// A pushdown move. Pop and push are strings whose first character is the
/// stack top; an empty string is λ.
struct PdaTransition {
    State from = 1;
    Symbol input = kLambda;
    Word pop;
    Word push;
    State to = 1;

    auto operator<=>(const PdaTransition&) const = default;
};

/// Pushdown automaton accepting by final state with input exhausted.
/// The stack alphabet always contains '$', which sits at the bottom of the
/// stack in every configuration.
struct Pda {
    std::string name;
    int states = 1;
    Alphabet input;
    Alphabet stack{kBottom};
    std::vector<PdaTransition> transitions;
    std::set<State> finals;

    bool operator==(const Pda&) const = default;

    /// Checks indices, alphabets and bottom preservation: a move popping '$'
    /// must push a string ending in '$', and '$' may appear in a push string
    /// only as its last character of a move that popped '$'.
    void validate() const;

    /// Every move reads one input symbol and pops/pushes at most one symbol.
    bool lettering() const;
    /// Every move's input, pop and push components have length at most one.
    bool quasi_lettering() const;
};

/// Every Nfa is a Pda that never touches its stack.
Pda as_pda(const Nfa& m);

struct PdaConfig {
    State state = 1;
    std::size_t position = 0;
    Word stack{kBottom};  // top first

    auto operator<=>(const PdaConfig&) const = default;
};

enum class Outcome { accept, reject, budget_exhausted };

std::string to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::reject;
    /// For accept: configurations from the initial one to the accepting one.
    std::vector<PdaConfig> witness;

    bool accepted() const { return outcome == Outcome::accept; }
};

/// Step and stack-height limits for configuration searches.
struct SearchLimits {
    std::size_t budget = 100000;
    /// 0 selects the default 2*|w| + 16.
    std::size_t stack_cap = 0;

    std::size_t cap_for(std::size_t input_length) const
    {
        return stack_cap != 0 ? stack_cap : 2 * input_length + 16;
    }
};

}  // namespace uniauto
