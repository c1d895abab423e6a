#include "uniauto/transition_system.hpp"

#include <optional>

#include "uniauto/simulate.hpp"

namespace uniauto {

void FiniteTs::validate() const
{
    if (states < 0)
        throw InputError("negative state count");
    auto in_range = [&](State s) { return s >= 1 && s <= states; };
    for (State s : initial)
        if (!in_range(s))
            throw InputError("initial state " + std::to_string(s) + " out of range");
    for (State s : finals)
        if (!in_range(s))
            throw InputError("final state " + std::to_string(s) + " out of range");
    for (const auto& t : transitions) {
        if (!in_range(t.from) || !in_range(t.to))
            throw InputError("transition endpoint out of range");
        if (t.input != kLambda && !labels.contains(t.input))
            throw InputError("label '" + symbol_name(t.input) + "' is not declared");
    }
}

TransitionSystem<State> FiniteTs::system() const
{
    validate();
    TransitionSystem<State> t;
    t.labels = labels;
    t.initial.assign(initial.begin(), initial.end());
    auto edges = transitions;
    t.successors = [edges](const State& s, Symbol a) {
        std::vector<State> out;
        for (const auto& e : edges)
            if (e.from == s && e.input == a)
                out.push_back(e.to);
        return out;
    };
    auto f = finals;
    t.is_final = [f](const State& s) { return f.count(s) != 0; };
    return t;
}

FiniteTs ts_from_fa(const Nfa& m)
{
    m.validate();
    FiniteTs t;
    t.states = m.states;
    t.labels = m.input;
    t.transitions = m.transitions;
    t.initial = {1};
    t.finals = m.finals;
    return t;
}

TransitionSystem<PdaConfig> ts_from_pda(const Pda& m)
{
    m.validate();
    TransitionSystem<PdaConfig> t;
    t.labels = m.input;
    t.initial = {PdaConfig{}};
    t.successors = [m](const PdaConfig& c, Symbol a) { return pda_step(m, c, a); };
    auto f = m.finals;
    t.is_final = [f](const PdaConfig& c) { return f.count(c.state) != 0; };
    return t;
}

std::vector<std::size_t> unary_lengths(const FiniteTs& t, State s, Symbol a, std::size_t bound)
{
    t.validate();
    const auto n = static_cast<std::size_t>(t.states);
    auto closure = [&](std::vector<bool> set) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : t.transitions)
                if (e.input == kLambda && set[static_cast<std::size_t>(e.from)] &&
                    !set[static_cast<std::size_t>(e.to)]) {
                    set[static_cast<std::size_t>(e.to)] = true;
                    changed = true;
                }
        }
        return set;
    };
    std::vector<bool> current(n + 1, false);
    current[static_cast<std::size_t>(s)] = true;
    current = closure(std::move(current));
    std::vector<std::size_t> lengths;
    for (std::size_t len = 0;; ++len) {
        for (State f : t.finals)
            if (current[static_cast<std::size_t>(f)]) {
                lengths.push_back(len);
                break;
            }
        if (len == bound)
            break;
        std::vector<bool> next(n + 1, false);
        bool any = false;
        for (const auto& e : t.transitions)
            if (e.input == a && current[static_cast<std::size_t>(e.from)]) {
                next[static_cast<std::size_t>(e.to)] = true;
                any = true;
            }
        if (!any)
            break;
        current = closure(std::move(next));
    }
    return lengths;
}

RegCounterexample reg_universality_counterexample(const FiniteTs& t, Symbol a)
{
    t.validate();
    const auto size = static_cast<std::size_t>(t.states);
    // witness[n] = a state whose unary language is exactly {aⁿ}
    std::vector<std::optional<State>> witness(size + 1);
    for (State s = 1; s <= t.states; ++s) {
        auto lengths = unary_lengths(t, s, a, 2 * size + 1);
        if (lengths.size() == 1 && lengths[0] < size && !witness[lengths[0]])
            witness[lengths[0]] = s;
    }
    RegCounterexample r;
    while (r.n < witness.size() && witness[r.n]) {
        r.witnesses.push_back(*witness[r.n]);
        ++r.n;
    }
    return r;
}

}  // namespace uniauto
