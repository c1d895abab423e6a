#include "uniauto/product.hpp"

#include <algorithm>

namespace uniauto {

Nfa remove_lambda(const Nfa& r)
{
    r.validate();
    const auto n = static_cast<std::size_t>(r.states);
    std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
    for (State q = 1; q <= r.states; ++q) {
        std::vector<State> work{q};
        reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)] = true;
        while (!work.empty()) {
            State s = work.back();
            work.pop_back();
            for (const auto& t : r.transitions)
                if (t.from == s && t.input == kLambda && !reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(t.to)]) {
                    reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(t.to)] = true;
                    work.push_back(t.to);
                }
        }
    }
    Nfa out;
    out.name = r.name;
    out.states = r.states;
    out.input = r.input;
    for (State q = 1; q <= r.states; ++q) {
        for (State s = 1; s <= r.states; ++s) {
            if (!reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)])
                continue;
            if (r.finals.count(s))
                out.finals.insert(q);
            for (const auto& t : r.transitions)
                if (t.from == s && t.input != kLambda)
                    out.transitions.push_back({q, t.input, t.to});
        }
    }
    std::sort(out.transitions.begin(), out.transitions.end());
    out.transitions.erase(std::unique(out.transitions.begin(), out.transitions.end()), out.transitions.end());
    return out;
}

Pda intersect_pda_nfa(const Pda& p, const Nfa& r)
{
    p.validate();
    r.validate();
    if (p.input != r.input)
        throw InputError("intersect_pda_nfa: input alphabets differ");
    if (r.has_lambda())
        throw InputError("intersect_pda_nfa: the finite automaton must be λ-free (see remove_lambda)");

    const int rn = r.states;
    auto pair_index = [rn](State i, State j) { return (i - 1) * rn + j; };

    Pda out;
    out.name = p.name + "×" + r.name;
    out.states = p.states * rn;
    out.input = p.input;
    out.stack = p.stack;
    for (State i : p.finals)
        for (State j : r.finals)
            out.finals.insert(pair_index(i, j));
    for (const auto& t : p.transitions) {
        if (t.input == kLambda) {
            for (State j = 1; j <= rn; ++j)
                out.transitions.push_back({pair_index(t.from, j), kLambda, t.pop, t.push, pair_index(t.to, j)});
            continue;
        }
        for (const auto& u : r.transitions)
            if (u.input == t.input)
                out.transitions.push_back(
                    {pair_index(t.from, u.from), t.input, t.pop, t.push, pair_index(t.to, u.to)});
    }
    return out;
}

Nfa fst_image(const Fst& t, const Nfa& a)
{
    t.validate();
    a.validate();
    for (Symbol x : a.input)
        if (!t.input.contains(x))
            throw InputError("fst_image: symbol '" + symbol_name(x) + "' is not in the transducer's input alphabet");

    const int tn = t.states;
    auto pair_index = [tn](State i, State j) { return (i - 1) * tn + j; };
    Nfa out;
    out.name = t.name + "(" + a.name + ")";
    out.states = a.states * tn;
    out.input = t.output;
    for (State i : a.finals)
        for (State j : t.finals)
            out.finals.insert(pair_index(i, j));

    auto emit = [&](State from, const Word& w, State to) {
        if (w.empty()) {
            out.transitions.push_back({from, kLambda, to});
            return;
        }
        State cur = from;
        for (std::size_t k = 0; k < w.size(); ++k) {
            State next = k + 1 == w.size() ? to : ++out.states;
            out.transitions.push_back({cur, w[k], next});
            cur = next;
        }
    };
    for (const auto& x : a.transitions) {
        if (x.input == kLambda) {
            for (State j = 1; j <= tn; ++j)
                out.transitions.push_back({pair_index(x.from, j), kLambda, pair_index(x.to, j)});
            continue;
        }
        for (const auto& y : t.transitions)
            if (y.input == x.input)
                emit(pair_index(x.from, y.from), y.output, pair_index(x.to, y.to));
    }
    for (const auto& y : t.transitions)
        if (y.input == kLambda)
            for (State i = 1; i <= a.states; ++i)
                emit(pair_index(i, y.from), y.output, pair_index(i, y.to));
    return out;
}

}  // namespace uniauto
