#include "uniauto/transducers.hpp"

#include "engine.hpp"

namespace uniauto {

namespace {

template <class M>
void validate_machine(const M& m)
{
    if (m.states < 1)
        throw InputError("a transducer needs at least one state");
    for (State f : m.finals)
        if (f < 1 || f > m.states)
            throw InputError("final state " + std::to_string(f) + " out of range");
    for (std::size_t i = 0; i < m.transitions.size(); ++i) {
        const auto& t = m.transitions[i];
        const auto where = "transition " + std::to_string(i + 1) + ": ";
        if (t.from < 1 || t.from > m.states || t.to < 1 || t.to > m.states)
            throw InputError(where + "state out of range");
        if (t.input != kLambda && !m.input.contains(t.input))
            throw InputError(where + "input symbol '" + symbol_name(t.input) + "' is not declared");
        for (Symbol s : t.output)
            if (!m.output.contains(s))
                throw InputError(where + "output symbol '" + symbol_name(s) + "' is not declared");
        if constexpr (requires { t.pop; }) {
            // Reuse the pushdown checks on a one-move automaton.
            Pda probe;
            probe.states = m.states;
            probe.input = m.input;
            probe.stack = m.stack;
            probe.transitions = {{t.from, t.input, t.pop, t.push, t.to}};
            try {
                probe.validate();
            } catch (const InputError& e) {
                std::string msg = e.what();
                auto colon = msg.find(": ");
                throw InputError(where + (colon == std::string::npos ? msg : msg.substr(colon + 2)));
            }
        }
    }
}

bool prefix_compatible(const Word& a, const Word& b)
{
    const auto n = std::min(a.size(), b.size());
    return a.compare(0, n, b, 0, n) == 0;
}

template <class M>
bool deterministic_machine(const M& m)
{
    const auto& ts = m.transitions;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (ts[i].from != ts[j].from)
                continue;
            bool inputs_clash = ts[i].input == ts[j].input || ts[i].input == kLambda || ts[j].input == kLambda;
            if (!inputs_clash)
                continue;
            if constexpr (requires { ts[i].pop; }) {
                if (!prefix_compatible(ts[i].pop, ts[j].pop))
                    continue;
            }
            return false;
        }
    }
    return true;
}

Move one_way_move(Symbol input) { return input == kLambda ? Move::M : Move::R; }

template <class M>
OutputSet run(const M& m, const std::vector<detail::Rule>& rules, const Word& w, const SearchLimits& limits,
              bool two_way, bool uses_stack)
{
    m.validate();
    require_word_over(w, m.input);
    detail::EngineOptions opts;
    opts.two_way = two_way;
    opts.uses_stack = uses_stack;
    opts.collect_outputs = true;
    opts.stop_at_first_accept = false;
    opts.budget = limits.budget;
    opts.stack_cap = limits.cap_for(w.size());
    auto r = detail::run_machine(rules, m.states, m.finals, w, opts);
    return {std::move(r.outputs), r.exhausted || r.truncated};
}

}  // namespace

void Fst::validate() const { validate_machine(*this); }
void Pdt::validate() const { validate_machine(*this); }
void TwoWayFst::validate() const { validate_machine(*this); }
void TwoWayPdt::validate() const { validate_machine(*this); }

bool Fst::deterministic() const { return deterministic_machine(*this); }
bool Pdt::deterministic() const { return deterministic_machine(*this); }
bool TwoWayFst::deterministic() const { return deterministic_machine(*this); }
bool TwoWayPdt::deterministic() const { return deterministic_machine(*this); }

bool Pdt::normal_form() const
{
    for (const auto& t : transitions)
        if (t.output.size() > 1 || t.pop.size() > 1 || t.push.size() > 1)
            return false;
    return true;
}

OutputSet apply_fst(const Fst& t, const Word& w, const SearchLimits& limits)
{
    std::vector<detail::Rule> rules;
    for (const auto& x : t.transitions)
        rules.push_back({x.from, x.input, x.output, {}, {}, one_way_move(x.input), x.to});
    return run(t, rules, w, limits, false, false);
}

OutputSet apply_pdt(const Pdt& t, const Word& w, const SearchLimits& limits)
{
    std::vector<detail::Rule> rules;
    for (const auto& x : t.transitions)
        rules.push_back({x.from, x.input, x.output, x.pop, x.push, one_way_move(x.input), x.to});
    return run(t, rules, w, limits, false, true);
}

OutputSet apply_2fst(const TwoWayFst& t, const Word& w, const SearchLimits& limits)
{
    std::vector<detail::Rule> rules;
    for (const auto& x : t.transitions)
        rules.push_back({x.from, x.input, x.output, {}, {}, x.move, x.to});
    return run(t, rules, w, limits, true, false);
}

OutputSet apply_2pdt(const TwoWayPdt& t, const Word& w, const SearchLimits& limits)
{
    std::vector<detail::Rule> rules;
    for (const auto& x : t.transitions)
        rules.push_back({x.from, x.input, x.output, x.pop, x.push, x.move, x.to});
    return run(t, rules, w, limits, true, true);
}

Fst identity_fst(const Alphabet& sigma)
{
    Fst t;
    t.name = "identity";
    t.input = sigma;
    t.output = sigma;
    t.finals = {1};
    for (Symbol s : sigma)
        t.transitions.push_back({1, s, Word(1, s), 1});
    return t;
}

}  // namespace uniauto
