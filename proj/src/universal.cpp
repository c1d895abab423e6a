#include "uniauto/universal.hpp"

#include <algorithm>
#include <array>

#include "uniauto/simulate.hpp"

namespace uniauto {

namespace {

const Word kSectionSymbols = U"DSABP01";

struct Builder {
    Pda m;

    State add_state() { return ++m.states; }

    void add(State from, Symbol in, Word pop, Word push, State to)
    {
        m.transitions.push_back({from, in, std::move(pop), std::move(push), to});
    }
    void read(State from, Symbol in, State to) { add(from, in, U"", U"", to); }
    void peek(State from, Symbol in, Symbol top, State to) { add(from, in, Word(1, top), Word(1, top), to); }
};

// Compare one block against the stack, rebuild the stack from its trailing
// components and leave the head on the D of the following block.
// Returns the entry state for each bit y.
std::array<State, 2> match_chain(Builder& b, State sink, State after)
{
    const State after_y = b.add_state();
    const State cmp_b0 = b.add_state();
    const State cmp_b1 = b.add_state();
    const State cmp_b = b.add_state();
    const State dollar = b.add_state();
    const State dp0 = b.add_state();
    const State dp1 = b.add_state();
    const State push_b0 = b.add_state();
    const State push_b = b.add_state();
    const State push_a0 = b.add_state();
    const State push_a = b.add_state();

    std::array<State, 2> entry{};
    for (int y = 0; y < 2; ++y) {
        const Symbol bit = U'0' + y;
        const Symbol other = U'1' - y;
        const State m_s = b.add_state();
        const State cmp_a = b.add_state();
        entry[static_cast<std::size_t>(y)] = m_s;
        b.add(m_s, U'S', U"S", U"", cmp_a);
        b.add(cmp_a, U'A', U"A", U"", cmp_a);
        b.peek(cmp_a, U'A', U'P', sink);
        b.peek(cmp_a, U'A', kBottom, sink);
        b.peek(cmp_a, bit, U'P', after_y);
        b.peek(cmp_a, bit, kBottom, after_y);
        b.peek(cmp_a, bit, U'A', sink);
        b.read(cmp_a, other, sink);
    }

    b.read(after_y, U'P', cmp_b0);

    b.read(cmp_b0, U'P', push_b0);
    b.add(cmp_b0, U'B', U"P", U"", cmp_b1);
    b.peek(cmp_b0, U'B', kBottom, dollar);
    b.add(cmp_b1, kLambda, U"B", U"", cmp_b);
    b.add(cmp_b, U'B', U"B", U"", cmp_b);
    b.peek(cmp_b, U'B', U'P', sink);
    b.peek(cmp_b, U'B', kBottom, sink);
    b.peek(cmp_b, U'P', U'P', push_b0);
    b.peek(cmp_b, U'P', kBottom, push_b0);
    b.peek(cmp_b, U'P', U'B', sink);

    b.read(dollar, U'P', dp0);
    b.read(dollar, U'B', sink);
    b.read(dp0, U'B', dp1);
    b.read(dp0, U'S', sink);
    b.read(dp1, U'S', push_a0);
    b.read(dp1, U'B', sink);

    b.add(push_b0, U'B', U"", U"B", push_b);
    b.read(push_b0, U'S', push_a0);
    b.add(push_b, U'B', U"", U"B", push_b);
    b.add(push_b, U'S', U"", U"P", push_a0);
    b.add(push_a0, U'A', U"", U"A", push_a);
    b.add(push_a, U'A', U"", U"A", push_a);
    b.add(push_a, U'D', U"", U"S", after);
    b.read(push_a, U'T', sink);
    return entry;
}

void skip_to_t(Builder& b, State s, State on_t)
{
    for (Symbol x : kSectionSymbols)
        b.read(s, x, s);
    b.read(s, U'T', on_t);
}

}  // namespace

UniversalPda build_universal_pda()
{
    Builder b;
    b.m.name = "U";
    b.m.states = 0;
    b.m.input = Alphabet(Word(U"01ABDPS%T"));
    b.m.stack = Alphabet(Word(U"SAPB$"));

    UniversalPda u;
    u.start = b.add_state();
    const State start2 = b.add_state();
    u.read = b.add_state();
    u.sink = b.add_state();
    u.accept_scan = b.add_state();
    u.accept = b.add_state();
    const State check_a1 = b.add_state();
    const State check_a2 = b.add_state();
    const State check_end = b.add_state();
    const State skip = b.add_state();
    const State skip_last = b.add_state();
    std::array<State, 2> seek{b.add_state(), b.add_state()};
    std::array<State, 2> seek_last{b.add_state(), b.add_state()};
    const State scan_empty = b.add_state();
    u.match0 = seek[0];
    u.match1 = seek[1];
    b.m.finals = {u.accept};

    b.add(u.start, kLambda, U"", U"A", start2);
    b.add(start2, kLambda, U"", U"S", u.read);

    b.read(u.read, U'0', seek[0]);
    b.read(u.read, U'1', seek[1]);
    b.read(u.read, U'%', scan_empty);

    const auto chain = match_chain(b, u.sink, skip);
    const auto chain_last = match_chain(b, u.sink, skip_last);
    for (std::size_t y = 0; y < 2; ++y) {
        for (auto [s, entry] : {std::pair{seek[y], chain[y]}, std::pair{seek_last[y], chain_last[y]}}) {
            b.read(s, U'D', entry);
            for (Symbol x : kSectionSymbols)
                b.read(s, x, s);
            b.read(s, U'T', u.sink);
        }
        b.read(seek[y], U'%', seek_last[y]);
        b.read(seek_last[y], U'%', u.sink);
    }

    skip_to_t(b, skip, u.read);
    skip_to_t(b, skip_last, u.accept_scan);
    skip_to_t(b, scan_empty, u.accept_scan);

    // Final check: the state block must be S A A.
    b.add(u.accept_scan, kLambda, U"S", U"", check_a1);
    b.add(check_a1, kLambda, U"A", U"", check_a2);
    b.add(check_a2, kLambda, U"A", U"", check_end);
    b.add(check_a1, kLambda, U"P", U"P", u.sink);
    b.add(check_a1, kLambda, U"$", U"$", u.sink);
    b.add(check_a2, kLambda, U"P", U"P", u.sink);
    b.add(check_a2, kLambda, U"$", U"$", u.sink);
    b.add(check_end, kLambda, U"P", U"P", u.accept);
    b.add(check_end, kLambda, U"$", U"$", u.accept);
    b.add(check_end, kLambda, U"A", U"A", u.sink);

    b.m.validate();
    u.machine = std::move(b.m);
    return u;
}

std::size_t symbolic_tuple_count(int q_size, int delta_size)
{
    const auto q = static_cast<std::size_t>(q_size);
    const auto d = static_cast<std::size_t>(delta_size) + 1;
    return q * 2 * d * d * q;
}

Symbol tuple_symbol(int q_size, int delta_size, const encoding::RepTuple& t)
{
    if (t.source < 1 || t.source > q_size || t.target < 1 || t.target > q_size)
        throw InputError("tuple state index out of range");
    if (t.pop < 0 || t.pop > delta_size || t.push < 0 || t.push > delta_size)
        throw InputError("tuple stack index out of range");
    if (t.input != U'0' && t.input != U'1')
        throw InputError("tuple input must be 0 or 1");
    const auto d = static_cast<std::size_t>(delta_size) + 1;
    std::size_t index = static_cast<std::size_t>(t.source - 1);
    index = index * 2 + static_cast<std::size_t>(t.input - U'0');
    index = index * d + static_cast<std::size_t>(t.pop);
    index = index * d + static_cast<std::size_t>(t.push);
    index = index * static_cast<std::size_t>(q_size) + static_cast<std::size_t>(t.target - 1);
    return static_cast<Symbol>(0xF0000 + index);
}

Symbol symbolic_marker_symbol() { return 0xEFFFF; }

Symbol symbolic_state_symbol(State q) { return static_cast<Symbol>(0x100000 + q); }

Pda build_symbolic_upda(int q_size, int delta_size)
{
    if (q_size < 2 || delta_size < 2)
        throw InputError("build_symbolic_upda: sizes must be at least 2");
    if (symbolic_tuple_count(q_size, delta_size) > 0xFFFE)
        throw InputError("build_symbolic_upda: tuple alphabet too large");

    Builder b;
    b.m.name = "U_symbolic";
    b.m.states = 0;
    const State s = b.add_state();
    const State r = b.add_state();
    const State r0 = b.add_state();
    const State r1 = b.add_state();
    const State a = b.add_state();
    const State e = b.add_state();
    b.m.finals = {e};

    auto stack_sym = [](int index) { return index == 0 ? Word{} : Word(1, encoding::stack_symbol_for_index(index)); };
    for (State q = 1; q <= q_size; ++q)
        b.m.stack.insert(symbolic_state_symbol(q));
    for (int d = 2; d <= delta_size; ++d)
        b.m.stack.insert(encoding::stack_symbol_for_index(d));
    b.m.input = {U'0', U'1', U'%', symbolic_marker_symbol()};

    b.add(s, kLambda, U"", Word(1, symbolic_state_symbol(1)), r);
    b.read(r, U'0', r0);
    b.read(r, U'1', r1);
    b.read(r, U'%', a);
    b.read(r, symbolic_marker_symbol(), r);
    for (State x : {r0, r1})
        b.read(x, symbolic_marker_symbol(), x);

    auto scan = [&](Symbol sym, State target) {
        const Symbol top = symbolic_state_symbol(target);
        b.read(a, sym, a);
        b.peek(a, sym, top, e);
        b.peek(e, sym, top, e);
        for (State q = 1; q <= q_size; ++q)
            if (q != target)
                b.peek(e, sym, symbolic_state_symbol(q), a);
    };
    scan(symbolic_marker_symbol(), 2);

    for (State from = 1; from <= q_size; ++from)
        for (Symbol y : Word(U"01"))
            for (int pop = 0; pop <= delta_size; ++pop)
                for (int push = 0; push <= delta_size; ++push)
                    for (State to = 1; to <= q_size; ++to) {
                        const Symbol sym = tuple_symbol(q_size, delta_size, {from, y, pop, push, to});
                        b.m.input.insert(sym);
                        b.read(r, sym, r);
                        b.read(r0, sym, r0);
                        b.read(r1, sym, r1);
                        scan(sym, to);
                        const bool bottom_ok = (pop == encoding::kBottomIndex) == (push == encoding::kBottomIndex);
                        if (!bottom_ok)
                            continue;
                        b.add(y == U'0' ? r0 : r1, sym, symbolic_state_symbol(from) + stack_sym(pop),
                              symbolic_state_symbol(to) + stack_sym(push), r);
                    }
    b.m.validate();
    return b.m;
}

std::pair<int, int> symbolic_sizes(const Pda& m)
{
    return {std::max(2, m.states), std::max(2, static_cast<int>(m.stack.size()))};
}

Word symbolic_input(const Pda& m, const Word& w)
{
    const auto rep = encoding::rep_list(m);
    const auto [q, d] = symbolic_sizes(m);
    Word section;
    for (std::size_t i = 0; i + 1 < rep.tuples.size(); ++i)
        section += tuple_symbol(q, d, rep.tuples[i]);
    section += symbolic_marker_symbol();
    Word out;
    for (Symbol x : w) {
        if (x != U'0' && x != U'1')
            throw InputError("symbolic_input: input word must be over {0,1}");
        out += x;
        out += section;
    }
    out += U'%';
    out += section;
    return out;
}

Verdict universal_run(const UniversalPda& u, const Pda& m, const Word& w, const SearchLimits& limits)
{
    if (!m.lettering())
        throw InputError("universal_run: machine '" + m.name + "' is not lettering");
    return pda_accepts(u.machine, encoding::encode_input(encoding::rep_list(m), w), limits);
}

std::uint64_t fingerprint(const Pda& m)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    auto mix_word = [&](const Word& w) {
        mix(w.size());
        for (Symbol s : w)
            mix(s);
    };
    mix(static_cast<std::uint64_t>(m.states));
    mix_word(Word(m.input.begin(), m.input.end()));
    mix_word(Word(m.stack.begin(), m.stack.end()));
    for (const auto& t : m.transitions) {
        mix(static_cast<std::uint64_t>(t.from));
        mix(t.input);
        mix_word(t.pop);
        mix_word(t.push);
        mix(static_cast<std::uint64_t>(t.to));
    }
    for (State f : m.finals)
        mix(static_cast<std::uint64_t>(f));
    return h;
}

}  // namespace uniauto
