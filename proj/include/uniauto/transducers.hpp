#pragma once

#include <set>
#include <string>
#include <vector>

#include "uniauto/automata.hpp"

namespace uniauto {

struct FstTransition {
    State from = 1;
    Symbol input = kLambda;
    Word output;
    State to = 1;
    auto operator<=>(const FstTransition&) const = default;
};

struct PdtTransition {
    State from = 1;
    Symbol input = kLambda;
    Word output;
    Word pop;
    Word push;
    State to = 1;
    auto operator<=>(const PdtTransition&) const = default;
};

struct TwoWayFstTransition {
    State from = 1;
    Symbol input = kLambda;
    Word output;
    Move move = Move::R;
    State to = 1;
    auto operator<=>(const TwoWayFstTransition&) const = default;
};

struct TwoWayPdtTransition {
    State from = 1;
    Symbol input = kLambda;
    Word output;
    Word pop;
    Word push;
    Move move = Move::R;
    State to = 1;
    auto operator<=>(const TwoWayPdtTransition&) const = default;
};

/// One-way finite-state transducer. Outputs are words, so a single move may
/// write several symbols.
struct Fst {
    std::string name;
    int states = 1;
    Alphabet input;
    Alphabet output;
    std::vector<FstTransition> transitions;
    std::set<State> finals;

    bool operator==(const Fst&) const = default;
    void validate() const;
    /// No two moves from one state can both apply: their inputs differ and
    /// neither is λ.
    bool deterministic() const;
};

/// One-way pushdown transducer; stack conventions as in Pda.
struct Pdt {
    std::string name;
    int states = 1;
    Alphabet input;
    Alphabet output;
    Alphabet stack{kBottom};
    std::vector<PdtTransition> transitions;
    std::set<State> finals;

    bool operator==(const Pdt&) const = default;
    void validate() const;
    /// Two moves from one state conflict when their inputs are equal or one is
    /// λ, and one pop string is a prefix of the other.
    bool deterministic() const;
    /// Quasi-lettering in input and pushdown.
    bool normal_form() const;
};

/// Two-way transducer reading the raw input (no endmarkers). A move reads
/// the symbol under the head (λ: reads nothing, also allowed past the end).
/// A run dies when the head would leave [0, |w|]. It accepts in a final
/// state either with the head past the last symbol or right after a stay
/// move.
struct TwoWayFst {
    std::string name;
    int states = 1;
    Alphabet input;
    Alphabet output;
    std::vector<TwoWayFstTransition> transitions;
    std::set<State> finals;

    bool operator==(const TwoWayFst&) const = default;
    void validate() const;
    bool deterministic() const;
};

struct TwoWayPdt {
    std::string name;
    int states = 1;
    Alphabet input;
    Alphabet output;
    Alphabet stack{kBottom};
    std::vector<TwoWayPdtTransition> transitions;
    std::set<State> finals;

    bool operator==(const TwoWayPdt&) const = default;
    void validate() const;
    bool deterministic() const;
};

/// Outputs of all accepting runs, deduplicated, length-lex ordered.
struct OutputSet {
    std::vector<Word> words;
    /// The budget ran out before every run was decided; words may be
    /// incomplete. Distinct from an empty result.
    bool exhausted = false;

    bool operator==(const OutputSet&) const = default;
};

/// Budget caps the number of configurations (head moves) explored.
OutputSet apply_fst(const Fst& t, const Word& w, const SearchLimits& limits = {});
OutputSet apply_pdt(const Pdt& t, const Word& w, const SearchLimits& limits = {});
OutputSet apply_2fst(const TwoWayFst& t, const Word& w, const SearchLimits& limits = {});
OutputSet apply_2pdt(const TwoWayPdt& t, const Word& w, const SearchLimits& limits = {});

/// Identity transducer over an alphabet (one state, final).
Fst identity_fst(const Alphabet& sigma);

}  // namespace uniauto
