#include <deque>
#include <regex>
#include <set>

#include "generators.hpp"
#include "support.hpp"
#include "uniauto/fixtures.hpp"
#include "uniauto/simulate.hpp"
#include "uniauto/universal.hpp"

using namespace uniauto;
namespace fx = uniauto::fixtures;

namespace {

const UniversalPda& shared_u()
{
    static const UniversalPda u = build_universal_pda();
    return u;
}

using ConfigKey = std::tuple<State, std::size_t, Word>;

/// Every configuration reachable on w, with the stack capped.
std::vector<PdaConfig> reachable(const Pda& m, const Word& w, std::size_t cap)
{
    std::set<ConfigKey> seen;
    std::vector<PdaConfig> out;
    std::deque<PdaConfig> queue{PdaConfig{}};
    while (!queue.empty()) {
        PdaConfig c = queue.front();
        queue.pop_front();
        if (c.stack.size() > cap || !seen.insert({c.state, c.position, c.stack}).second)
            continue;
        out.push_back(c);
        for (auto& n : pda_step(m, c, kLambda))
            queue.push_back(std::move(n));
        if (c.position < w.size())
            for (auto& n : pda_step(m, c, w[c.position]))
                queue.push_back(std::move(n));
    }
    return out;
}

std::string narrow(const Word& w) { return std::string(w.begin(), w.end()); }

}  // namespace

TEST_CASE("U is fixed")
{
    const auto& u = shared_u();
    CHECK_NOTHROW(u.machine.validate());
    CHECK(u.machine.input == Alphabet(U"01ABDPST%"));
    CHECK(u.machine.stack == Alphabet(U"SAPB$"));
    CHECK(u.machine.finals == std::set<State>{u.accept});
    CHECK(fingerprint(build_universal_pda().machine) == fingerprint(u.machine));
    const auto before = fingerprint(u.machine);
    (void)universal_run(u, fx::m_odd(), U"101");
    (void)universal_run(u, fx::m01(), U"0010");
    CHECK(fingerprint(u.machine) == before);
    CHECK(fingerprint(fx::m_odd()) != fingerprint(fx::m01()));
}

TEST_CASE("initial configuration")
{
    const auto& u = shared_u();
    const auto configs = reachable(u.machine, U"", 8);
    bool found = false;
    for (const auto& c : configs)
        if (c.state == u.read && c.position == 0)
            found = found || c.stack == U"SA$";
    CHECK(found);
}

TEST_CASE("universal_run examples")
{
    const auto& u = shared_u();
    CHECK(universal_run(u, fx::m_odd(), U"10").outcome == Outcome::accept);
    CHECK(universal_run(u, fx::m_odd(), U"11").outcome == Outcome::reject);
    CHECK(universal_run(u, fx::m01(), U"010").outcome == Outcome::accept);
    CHECK(universal_run(u, fx::m01(), U"0010").outcome == Outcome::reject);
    CHECK(universal_run(u, fx::m_odd(), U"").outcome == Outcome::reject);
    CHECK(universal_run(u, fx::m01(), U"").outcome == Outcome::reject);
    CHECK_THROWS_AS(universal_run(u, fx::d01(), U"01"), InputError);
}

TEST_CASE("U rejects input without the acceptance section")
{
    const auto& u = shared_u();
    const auto r = encoding::rep_list(fx::m_odd());
    const Word full = encoding::encode_input(r, U"1");
    CHECK(pda_accepts(u.machine, full).accepted());
    const Word cut = U"1" + encoding::sigma_encode(r) + U"T";
    CHECK(pda_accepts(u.machine, cut).outcome == Outcome::reject);
    CHECK(pda_accepts(u.machine, U"").outcome == Outcome::reject);
    CHECK(pda_accepts(u.machine, U"1").outcome == Outcome::reject);
}

TEST_CASE("universality on small words")
{
    const auto& u = shared_u();
    for (const Pda& m : {fx::m_odd(), fx::m01()})
        for (const auto& w : gen::all_words_upto(U"01", 6)) {
            const auto direct = pda_accepts(m, w);
            const auto via_u = universal_run(u, m, w);
            REQUIRE(direct.outcome != Outcome::budget_exhausted);
            CHECK(via_u.outcome == direct.outcome);
        }
    gen::Rng rng(41);
    for (int n = 0; n < 4; ++n) {
        const Pda m = gen::random_lettering_pda(rng, gen::uniform(rng, 2, 4), gen::uniform(rng, 0, 2),
                                                gen::uniform(rng, 2, 6));
        for (const auto& w : gen::all_words_upto(U"01", 5))
            CHECK(universal_run(u, m, w).outcome == pda_accepts(m, w).outcome);
    }
}

TEST_CASE("read-phase stacks encode a configuration")
{
    const auto& u = shared_u();
    const std::regex shape("SA+(PB*)*\\$");
    for (const Pda& m : {fx::m_odd(), fx::m01()})
        for (Word w : {Word(U"010"), Word(U"11"), Word(U"0")}) {
            const Word in = encoding::encode_input(encoding::rep_list(m), w);
            for (const auto& c : reachable(u.machine, in, 4 * in.size()))
                if (c.state == u.read)
                    CHECK_MESSAGE(std::regex_match(narrow(c.stack), shape), narrow(c.stack));
        }
}

TEST_CASE("the sink absorbs")
{
    const auto& u = shared_u();
    for (const auto& t : u.machine.transitions)
        if (t.from == u.sink)
            CHECK(t.to == u.sink);
    CHECK(u.machine.finals.count(u.sink) == 0);
    const Word in = encoding::encode_input(encoding::rep_list(fx::m_odd()), U"11");
    bool sunk = false;
    for (const auto& c : reachable(u.machine, in, 4 * in.size()))
        sunk = sunk || c.state == u.sink;
    CHECK(sunk);
}

TEST_CASE("symbolic U")
{
    CHECK(symbolic_tuple_count(2, 2) == 2u * 2 * 9 * 2);
    CHECK(symbolic_tuple_count(5, 3) == 5u * 2 * 16 * 5);
    CHECK_THROWS_AS(build_symbolic_upda(1, 2), InputError);
    CHECK_THROWS_AS(build_symbolic_upda(2, 1), InputError);

    const auto [q, d] = symbolic_sizes(fx::m_odd());
    CHECK(q == 2);
    CHECK(d == 2);
    const Pda s = build_symbolic_upda(q, d);
    CHECK(pda_accepts(s, symbolic_input(fx::m_odd(), U"1")).accepted());
    CHECK(pda_accepts(s, U"%").outcome == Outcome::reject);
    CHECK(tuple_symbol(q, d, {1, U'0', 0, 0, 1}) != tuple_symbol(q, d, {1, U'1', 0, 0, 1}));

    for (const Pda& m : {fx::m_odd(), fx::m01()}) {
        const auto [mq, md] = symbolic_sizes(m);
        const Pda sm = build_symbolic_upda(mq, md);
        for (const auto& w : gen::all_words_upto(U"01", 7))
            CHECK(pda_accepts(sm, symbolic_input(m, w)).outcome == pda_accepts(m, w).outcome);
    }
}
