#include "uniauto/simulate.hpp"

#include <algorithm>

#include "engine.hpp"

namespace uniauto {

namespace {

std::vector<bool> lambda_closure(const Nfa& m, std::vector<bool> set)
{
    std::vector<State> work;
    for (State q = 1; q <= m.states; ++q)
        if (set[static_cast<std::size_t>(q)])
            work.push_back(q);
    while (!work.empty()) {
        State q = work.back();
        work.pop_back();
        for (const auto& t : m.transitions) {
            if (t.from == q && t.input == kLambda && !set[static_cast<std::size_t>(t.to)]) {
                set[static_cast<std::size_t>(t.to)] = true;
                work.push_back(t.to);
            }
        }
    }
    return set;
}

}  // namespace

bool fa_accepts(const Nfa& m, const Word& w)
{
    require_word_over(w, m.input);
    std::vector<bool> current(static_cast<std::size_t>(m.states) + 1, false);
    current[1] = true;
    current = lambda_closure(m, std::move(current));
    for (Symbol a : w) {
        std::vector<bool> next(current.size(), false);
        for (const auto& t : m.transitions)
            if (t.input == a && current[static_cast<std::size_t>(t.from)])
                next[static_cast<std::size_t>(t.to)] = true;
        current = lambda_closure(m, std::move(next));
    }
    return std::any_of(m.finals.begin(), m.finals.end(),
                       [&](State f) { return current[static_cast<std::size_t>(f)]; });
}

std::vector<PdaConfig> pda_step(const Pda& m, const PdaConfig& c, Symbol next_input)
{
    std::vector<PdaConfig> out;
    for (const auto& t : m.transitions) {
        if (t.from != c.state || t.input != next_input)
            continue;
        if (c.stack.compare(0, t.pop.size(), t.pop) != 0 || c.stack.size() < t.pop.size())
            continue;
        PdaConfig next{t.to, c.position + (next_input == kLambda ? 0 : 1),
                       t.push + c.stack.substr(t.pop.size())};
        if (std::find(out.begin(), out.end(), next) == out.end())
            out.push_back(std::move(next));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

std::vector<Rule> rules_of(const Pda& m)
{
    std::vector<detail::Rule> rules;
    rules.reserve(m.transitions.size());
    for (const auto& t : m.transitions)
        rules.push_back({t.from, t.input, {}, t.pop, t.push, t.input == kLambda ? Move::M : Move::R, t.to});
    return rules;
}

}  // namespace detail

Verdict pda_accepts(const Pda& m, const Word& w, const SearchLimits& limits)
{
    require_word_over(w, m.input);
    detail::EngineOptions opts;
    opts.uses_stack = true;
    opts.want_witness = true;
    opts.budget = limits.budget;
    opts.stack_cap = limits.cap_for(w.size());
    auto r = detail::run_machine(detail::rules_of(m), m.states, m.finals, w, opts);
    Verdict v;
    if (r.accepted) {
        v.outcome = Outcome::accept;
        v.witness = std::move(r.witness);
    } else if (r.exhausted || r.truncated) {
        v.outcome = Outcome::budget_exhausted;
    }
    return v;
}

}  // namespace uniauto
