#include "uniauto/automata.hpp"

namespace uniauto {

namespace {

void check_state(State q, int states, std::size_t index)
{
    if (q < 1 || q > states)
        throw InputError("transition " + std::to_string(index + 1) + ": state " + std::to_string(q) +
                         " out of range 1.." + std::to_string(states));
}

void check_input(Symbol s, const Alphabet& sigma, std::size_t index)
{
    if (s != kLambda && !sigma.contains(s))
        throw InputError("transition " + std::to_string(index + 1) + ": input symbol '" + symbol_name(s) +
                         "' is not declared");
}

void check_finals(const std::set<State>& finals, int states)
{
    for (State f : finals)
        if (f < 1 || f > states)
            throw InputError("final state " + std::to_string(f) + " out of range");
}

}  // namespace

void Nfa::validate() const
{
    if (states < 1)
        throw InputError("an automaton needs at least one state");
    check_finals(finals, states);
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        check_state(transitions[i].from, states, i);
        check_state(transitions[i].to, states, i);
        check_input(transitions[i].input, input, i);
    }
}

bool Nfa::has_lambda() const
{
    for (const auto& t : transitions)
        if (t.input == kLambda)
            return true;
    return false;
}

void Pda::validate() const
{
    if (states < 1)
        throw InputError("an automaton needs at least one state");
    if (!stack.contains(kBottom))
        throw InputError("stack alphabet must contain '$'");
    check_finals(finals, states);
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& t = transitions[i];
        check_state(t.from, states, i);
        check_state(t.to, states, i);
        check_input(t.input, input, i);
        for (const Word* part : {&t.pop, &t.push})
            for (Symbol s : *part)
                if (!stack.contains(s))
                    throw InputError("transition " + std::to_string(i + 1) + ": stack symbol '" +
                                     symbol_name(s) + "' is not declared");
        const auto where = "transition " + std::to_string(i + 1) + ": ";
        auto bottom_at = t.pop.find(kBottom);
        if (bottom_at != Word::npos && bottom_at + 1 != t.pop.size())
            throw InputError(where + "'$' can only be the last popped symbol");
        bool pops_bottom = bottom_at != Word::npos;
        auto pushed = t.push.find(kBottom);
        if (pops_bottom) {
            if (t.push.empty() || t.push.back() != kBottom || pushed + 1 != t.push.size())
                throw InputError(where + "popping '$' requires pushing a string ending in '$'");
        } else if (pushed != Word::npos) {
            throw InputError(where + "'$' may only be pushed back after popping it");
        }
    }
}

bool Pda::quasi_lettering() const
{
    for (const auto& t : transitions)
        if (t.pop.size() > 1 || t.push.size() > 1)
            return false;
    return true;
}

bool Pda::lettering() const
{
    if (!quasi_lettering())
        return false;
    for (const auto& t : transitions)
        if (t.input == kLambda)
            return false;
    return true;
}

Pda as_pda(const Nfa& m)
{
    Pda p;
    p.name = m.name;
    p.states = m.states;
    p.input = m.input;
    p.finals = m.finals;
    for (const auto& t : m.transitions)
        p.transitions.push_back({t.from, t.input, {}, {}, t.to});
    return p;
}

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::accept:
        return "accept";
    case Outcome::reject:
        return "reject";
    case Outcome::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

}  // namespace uniauto
