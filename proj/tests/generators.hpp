#pragma once

// Random machines and words for the property tests.

#include <random>

#include "uniauto/automata.hpp"
#include "uniauto/encoding.hpp"
#include "uniauto/oracle.hpp"
#include "uniauto/simulate.hpp"
#include "uniauto/transition_system.hpp"

namespace gen {

using namespace uniauto;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Word random_word(Rng& rng, const Word& letters, std::size_t len)
{
    Word w;
    for (std::size_t i = 0; i < len; ++i)
        w += letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))];
    return w;
}

/// All words over letters of exactly length n, in lexicographic order of
/// the letter positions.
inline std::vector<Word> all_words(const Word& letters, std::size_t n)
{
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (Symbol s : letters)
                next.push_back(w + s);
        out = std::move(next);
    }
    return out;
}

inline std::vector<Word> all_words_upto(const Word& letters, std::size_t n)
{
    std::vector<Word> out;
    for (std::size_t k = 0; k <= n; ++k)
        for (auto& w : all_words(letters, k))
            out.push_back(std::move(w));
    return out;
}

/// Lettering PDA over {0,1} with a single final state 2, satisfying the
/// representation conventions. A random 1→…→2 path keeps the final state
/// reachable; with visit_all it runs 1→3→4→…→states→2.
inline Pda random_lettering_pda(Rng& rng, int states, int stack_symbols, int extra_transitions,
                                bool visit_all = false)
{
    Pda m;
    m.name = "random";
    m.states = states;
    m.input = {U'0', U'1'};
    m.finals = {2};
    Word syms;
    for (int i = 0; i < stack_symbols; ++i) {
        syms += static_cast<Symbol>(U'a' + i);
        m.stack.insert(static_cast<Symbol>(U'a' + i));
    }
    auto random_move = [&](State from, State to) {
        PdaTransition t{from, coin(rng) ? U'1' : U'0', U"", U"", to};
        const int kind = uniform(rng, 0, 4);
        if (kind == 1 && !syms.empty()) {
            t.push = Word(1, syms[static_cast<std::size_t>(uniform(rng, 0, stack_symbols - 1))]);
        } else if (kind == 2 && !syms.empty()) {
            t.pop = Word(1, syms[static_cast<std::size_t>(uniform(rng, 0, stack_symbols - 1))]);
        } else if (kind == 3 && !syms.empty()) {
            t.pop = Word(1, syms[static_cast<std::size_t>(uniform(rng, 0, stack_symbols - 1))]);
            t.push = Word(1, syms[static_cast<std::size_t>(uniform(rng, 0, stack_symbols - 1))]);
        } else if (kind == 4) {
            t.pop = U"$";
            t.push = U"$";
        }
        return t;
    };
    State cur = 1;
    const int hops = visit_all ? states - 2 : uniform(rng, 0, states - 2);
    for (int h = 0; h < hops; ++h) {
        State next = visit_all ? 3 + h : uniform(rng, 3, states);
        auto t = random_move(cur, next);
        t.pop = t.push = U"";
        m.transitions.push_back(t);
        cur = next;
    }
    {
        auto t = random_move(cur, 2);
        t.pop = t.push = U"";
        m.transitions.push_back(t);
    }
    for (int i = 0; i < extra_transitions; ++i)
        m.transitions.push_back(random_move(uniform(rng, 1, states), uniform(rng, 1, states)));
    std::shuffle(m.transitions.begin(), m.transitions.end(), rng);
    m.validate();
    return m;
}

inline Nfa random_nfa(Rng& rng, int max_states, const Word& letters, bool lambda_moves)
{
    Nfa m;
    m.name = "random";
    m.states = uniform(rng, 1, max_states);
    m.input = Alphabet(letters);
    const int count = uniform(rng, 0, 3 * m.states);
    for (int i = 0; i < count; ++i) {
        Symbol s = lambda_moves && coin(rng, 0.15) ? kLambda : random_word(rng, letters, 1)[0];
        m.transitions.push_back({uniform(rng, 1, m.states), s, uniform(rng, 1, m.states)});
    }
    for (State q = 1; q <= m.states; ++q)
        if (coin(rng, 0.3))
            m.finals.insert(q);
    return m;
}

/// General PDA over letters with λ-moves and multi-symbol pushes.
inline Pda random_pda(Rng& rng, int max_states, const Word& letters)
{
    Pda m;
    m.name = "random";
    m.states = uniform(rng, 1, max_states);
    m.input = Alphabet(letters);
    m.stack = {kBottom, U'x', U'y'};
    const Word syms = U"xy";
    const int count = uniform(rng, 1, 3 * m.states);
    for (int i = 0; i < count; ++i) {
        PdaTransition t;
        t.from = uniform(rng, 1, m.states);
        t.to = uniform(rng, 1, m.states);
        t.input = coin(rng, 0.2) ? kLambda : random_word(rng, letters, 1)[0];
        switch (uniform(rng, 0, 4)) {
        case 0:
            break;
        case 1:
            t.push = random_word(rng, syms, static_cast<std::size_t>(uniform(rng, 1, 2)));
            break;
        case 2:
            t.pop = random_word(rng, syms, 1);
            break;
        case 3:
            t.pop = random_word(rng, syms, 1);
            t.push = random_word(rng, syms, static_cast<std::size_t>(uniform(rng, 0, 2)));
            break;
        default:
            t.pop = U"$";
            t.push = random_word(rng, syms, static_cast<std::size_t>(uniform(rng, 0, 1))) + U'$';
        }
        m.transitions.push_back(t);
    }
    for (State q = 1; q <= m.states; ++q)
        if (coin(rng, 0.3))
            m.finals.insert(q);
    m.validate();
    return m;
}

/// random_pda redrawn until its language up to max_len is decidable within
/// the default search limits, both by enumeration and per word.
inline Pda random_decidable_pda(Rng& rng, int max_states, const Word& letters, std::size_t max_len)
{
    while (true) {
        Pda m = random_pda(rng, max_states, letters);
        try {
            enumerate_language(m, max_len);
        } catch (const BudgetExhausted&) {
            continue;
        }
        bool decided = true;
        for (const auto& w : all_words_upto(letters, max_len))
            if (pda_accepts(m, w).outcome == Outcome::budget_exhausted) {
                decided = false;
                break;
            }
        if (decided)
            return m;
    }
}

inline FiniteTs random_finite_ts(Rng& rng, int max_states, Symbol a)
{
    FiniteTs t;
    t.states = uniform(rng, 0, max_states);
    t.labels = {a};
    if (t.states == 0)
        return t;
    const int count = uniform(rng, 0, 2 * t.states);
    for (int i = 0; i < count; ++i)
        t.transitions.push_back({uniform(rng, 1, t.states), coin(rng, 0.15) ? kLambda : a, uniform(rng, 1, t.states)});
    for (State q = 1; q <= t.states; ++q) {
        if (coin(rng, 0.3))
            t.finals.insert(q);
        if (coin(rng, 0.3))
            t.initial.insert(q);
    }
    return t;
}

inline encoding::RepTuple random_tuple(Rng& rng, int max_index)
{
    return {uniform(rng, 1, max_index), coin(rng) ? U'1' : U'0', uniform(rng, 0, max_index), uniform(rng, 0, max_index),
            uniform(rng, 1, max_index)};
}

}  // namespace gen
