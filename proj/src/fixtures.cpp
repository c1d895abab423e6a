#include "uniauto/fixtures.hpp"

namespace uniauto::fixtures {

Pda d01()
{
    Pda m;
    m.name = "D01";
    m.states = 3;
    m.input = {U'0', U'1'};
    m.stack = {kBottom, U'a'};
    m.finals = {2};
    m.transitions = {
        {1, U'0', U"", U"a", 1},
        {1, kLambda, U"$", U"$", 2},
        {1, U'1', U"a", U"", 3},
        {3, U'1', U"a", U"", 3},
        {3, kLambda, U"$", U"$", 2},
    };
    return m;
}

Nfa m_odd_nfa()
{
    Nfa m;
    m.name = "M_odd";
    m.states = 2;
    m.input = {U'0', U'1'};
    m.finals = {2};
    m.transitions = {{1, U'0', 1}, {1, U'1', 2}, {2, U'0', 2}, {2, U'1', 1}};
    return m;
}

Pda m_odd() { return as_pda(m_odd_nfa()); }

Pda m01()
{
    Pda m;
    m.name = "M01";
    m.states = 3;
    m.input = {U'0', U'1'};
    m.stack = {kBottom, U'a'};
    m.finals = {2};
    m.transitions = {
        {1, U'0', U"", U"a", 1},
        {1, U'1', U"a", U"", 3},
        {3, U'1', U"a", U"", 3},
        {3, U'0', U"$", U"$", 2},
    };
    return m;
}

Pda anbn()
{
    Pda m;
    m.name = "M_anbn";
    m.states = 4;
    m.input = {U'0', U'1'};
    m.stack = {kBottom, U'a', U'b'};
    m.finals = {2};
    m.transitions = {
        {1, U'0', U"", U"b", 4},
        {4, U'0', U"", U"a", 4},
        {4, U'1', U"a", U"", 3},
        {4, U'1', U"b", U"", 2},
        {3, U'1', U"a", U"", 3},
        {3, U'1', U"b", U"", 2},
    };
    return m;
}

Pdt t1()
{
    Pdt t;
    t.name = "T1";
    t.states = 3;
    t.input = {U'0', U'1'};
    t.output = {U'0', U'1'};
    t.stack = {kBottom, U'0'};
    t.finals = {3};
    t.transitions = {
        {1, U'0', U"0", U"$", U"0$", 1},
        {1, U'0', U"0", U"0", U"00", 1},
        {1, U'1', U"", U"$", U"$", 3},
        {1, U'1', U"", U"0", U"0", 2},
        {2, kLambda, U"1", U"0", U"", 2},
        {2, kLambda, U"", U"$", U"$", 3},
    };
    return t;
}

Pdt t2()
{
    Pdt t;
    t.name = "T2";
    t.states = 4;
    t.input = {U'0', U'1'};
    t.output = {U'0', U'1'};
    t.stack = {kBottom, U'0', U'1'};
    t.finals = {4};
    t.transitions = {
        {1, U'0', U"0", U"$", U"0$", 1},
        {1, U'0', U"0", U"0", U"00", 1},
        {1, U'1', U"1", U"0", U"10", 2},
        {2, U'1', U"1", U"1", U"11", 2},
        {2, U'0', U"", U"1", U"1", 3},
        {3, kLambda, U"0", U"1", U"", 3},
        {3, kLambda, U"1", U"0", U"", 3},
        {3, kLambda, U"", U"$", U"$", 4},
    };
    return t;
}

Pdt t3()
{
    Pdt t;
    t.name = "T3";
    t.states = 4;
    t.input = {U'0', U'1', U'c'};
    t.output = {U'0', U'1', U'c'};
    t.stack = {kBottom, U'0', U'1', U'c'};
    t.finals = {4};
    const Word bits = U"01";
    for (Symbol x : bits) {
        const Word xs(1, x);
        // q0: copy w and push it
        t.transitions.push_back({1, x, xs, U"$", xs + U"$", 1});
        for (Symbol y : bits)
            t.transitions.push_back({1, x, xs, Word(1, y), xs + y, 1});
        // q1: copy wᴿ and push it on top of the pushed c
        t.transitions.push_back({2, x, xs, U"$", xs + U"$", 2});
        for (Symbol y : Word(U"01c"))
            t.transitions.push_back({2, x, xs, Word(1, y), xs + y, 2});
        t.transitions.push_back({1, U'c', U"c", xs, U"c" + xs, 2});
        t.transitions.push_back({2, U'c', U"c", xs, xs, 3});
    }
    // q2: pop everything, echoing it
    for (Symbol y : Word(U"01c"))
        t.transitions.push_back({3, kLambda, Word(1, y), Word(1, y), U"", 3});
    t.transitions.push_back({3, kLambda, U"c", U"$", U"$", 4});
    return t;
}

TwoWayFst t4()
{
    TwoWayFst t;
    t.name = "T4";
    t.states = 4;
    t.input = {U'0', U'1', U'a', U'b'};
    t.output = {U'0', U'1', U'a'};
    t.finals = {4};
    t.transitions = {
        {1, U'a', U"a", Move::R, 1}, {1, U'0', U"0", Move::R, 1}, {1, U'1', U"1", Move::R, 1},
        {1, U'b', U"", Move::L, 2},  {2, U'0', U"", Move::L, 2},  {2, U'1', U"", Move::L, 2},
        {2, U'a', U"a", Move::R, 3}, {3, U'0', U"0", Move::R, 3}, {3, U'1', U"1", Move::R, 3},
        {3, U'b', U"", Move::M, 4},
    };
    return t;
}

Fst phi()
{
    Fst t;
    t.name = "phi";
    t.states = 3;
    t.input = {U'0', U'1'};
    t.output = {U'0', U'1', kInitialMarker, kFinalMarker};
    t.finals = {3};
    t.transitions = {
        {1, kLambda, Word(1, kInitialMarker), 2},
        {2, U'0', U"0", 2},
        {2, U'1', U"1", 2},
        {2, kLambda, Word(1, kFinalMarker), 3},
    };
    return t;
}

Fst psi()
{
    Fst t;
    t.name = "psi";
    t.states = 1;
    t.input = {U'0', U'1', kInitialMarker, kFinalMarker, kSeparator};
    t.output = {U'0', U'1', kSeparator};
    t.finals = {1};
    t.transitions = {
        {1, kInitialMarker, U"", 1},
        {1, kFinalMarker, U"", 1},
        {1, U'0', U"0", 1},
        {1, U'1', U"1", 1},
        {1, kSeparator, Word(1, kSeparator), 1},
    };
    return t;
}

TransducerFixture transducer_fixture(std::string_view name)
{
    if (name == "T1")
        return t1();
    if (name == "T2")
        return t2();
    if (name == "T3")
        return t3();
    if (name == "T4")
        return t4();
    if (name == "phi")
        return phi();
    if (name == "psi")
        return psi();
    throw InputError("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string_view> transducer_fixture_names() { return {"T1", "T2", "T3", "T4", "phi", "psi"}; }

OutputSet apply_fixture(const TransducerFixture& fixture, const Word& w, const SearchLimits& limits)
{
    return std::visit(
        [&](const auto& t) -> OutputSet {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Pdt>)
                return apply_pdt(t, w, limits);
            else if constexpr (std::is_same_v<T, TwoWayFst>)
                return apply_2fst(t, w, limits);
            else
                return apply_fst(t, w, limits);
        },
        fixture);
}

}  // namespace uniauto::fixtures
