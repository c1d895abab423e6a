#pragma once

#include <functional>
#include <set>
#include <vector>

#include "uniauto/automata.hpp"
#include "uniauto/oracle.hpp"

namespace uniauto {

/// A possibly infinite transition system presented lazily.
template <class S>
struct TransitionSystem {
    Alphabet labels;
    std::vector<S> initial;
    /// Successors under a label, or under λ when the label is kLambda.
    std::function<std::vector<S>(const S&, Symbol)> successors;
    std::function<bool(const S&)> is_final;
};

/// Explicit finite system with states 1..states (possibly none).
struct FiniteTs {
    int states = 0;
    Alphabet labels;
    std::vector<NfaTransition> transitions;
    std::set<State> initial;
    std::set<State> finals;

    bool operator==(const FiniteTs&) const = default;

    void validate() const;
    TransitionSystem<State> system() const;
};

FiniteTs ts_from_fa(const Nfa& m);

/// Configuration graph of m. Configurations carry the number of symbols
/// read so far, so they are only created on demand up to the explored depth.
TransitionSystem<PdaConfig> ts_from_pda(const Pda& m);

/// Words of length ≤ max_len labelling a path from a state in start to a
/// final state, in length-lexicographic order. Throws BudgetExhausted if
/// a λ-closure grows past closure_budget states.
template <class S>
std::vector<Word> ts_language_upto(const TransitionSystem<S>& t, const std::vector<S>& start, std::size_t max_len,
                                   std::size_t closure_budget = 100000)
{
    auto closure = [&](std::set<S> set) {
        std::vector<S> work(set.begin(), set.end());
        while (!work.empty()) {
            S s = std::move(work.back());
            work.pop_back();
            for (auto& n : t.successors(s, kLambda))
                if (set.insert(n).second) {
                    if (set.size() > closure_budget)
                        throw BudgetExhausted("λ-closure exceeded its budget");
                    work.push_back(std::move(n));
                }
        }
        return set;
    };

    std::vector<Word> out;
    Word prefix;
    std::function<void(const std::set<S>&)> visit = [&](const std::set<S>& current) {
        for (const auto& s : current)
            if (t.is_final(s)) {
                out.push_back(prefix);
                break;
            }
        if (prefix.size() == max_len)
            return;
        for (Symbol a : t.labels) {
            std::set<S> next;
            for (const auto& s : current)
                for (auto& n : t.successors(s, a))
                    next.insert(std::move(n));
            if (next.empty())
                continue;
            prefix.push_back(a);
            visit(closure(std::move(next)));
            prefix.pop_back();
        }
    };
    if (!start.empty())
        visit(closure(std::set<S>(start.begin(), start.end())));
    sort_length_lex(out);
    return out;
}

template <class S>
std::vector<Word> ts_language_upto(const TransitionSystem<S>& t, std::size_t max_len)
{
    return ts_language_upto(t, t.initial, max_len);
}

/// Least n such that no state's language within a* is exactly {aⁿ}, with
/// one witness state per m < n whose language within a* is {aᵐ}.
struct RegCounterexample {
    std::size_t n = 0;
    std::vector<State> witnesses;
};

RegCounterexample reg_universality_counterexample(const FiniteTs& t, Symbol a);

/// Accepted lengths ℓ ≤ bound of aˡ from state s (λ-moves allowed).
std::vector<std::size_t> unary_lengths(const FiniteTs& t, State s, Symbol a, std::size_t bound);

}  // namespace uniauto
