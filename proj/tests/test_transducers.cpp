#include "generators.hpp"
#include "support.hpp"
#include "uniauto/encoding.hpp"
#include "uniauto/fixtures.hpp"
#include "uniauto/oracle.hpp"
#include "uniauto/product.hpp"
#include "uniauto/transducers.hpp"

using namespace uniauto;
namespace fx = uniauto::fixtures;

namespace {

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace

TEST_CASE("φ and ψ")
{
    CHECK(apply_fst(fx::phi(), U"01").words == Words{U"<01>"});
    CHECK(apply_fst(fx::psi(), U"<01>").words == Words{U"01"});
    CHECK(apply_fst(fx::psi(), U"<0>#1").words == Words{U"0#1"});
    CHECK(apply_fst(identity_fst({U'0'}), U"").words == Words{U""});
    CHECK(fx::phi().states == 3);
    CHECK_FALSE(fx::phi().deterministic());
    CHECK(fx::psi().deterministic());

    for (const auto& w : gen::all_words_upto(U"01", 10)) {
        auto marked = apply_fst(fx::phi(), w);
        REQUIRE(marked.words.size() == 1);
        CHECK(apply_fst(fx::psi(), marked.words[0]).words == Words{w});
    }
}

TEST_CASE("T1")
{
    const Pdt t = fx::t1();
    CHECK(t.states == 3);
    CHECK(t.finals == std::set<State>{3});
    CHECK(t.deterministic());
    CHECK(apply_pdt(t, U"0001").words == Words{U"000111"});
    CHECK(apply_pdt(t, U"1").words == Words{U""});
    CHECK(apply_pdt(t, U"00").words.empty());
    CHECK_FALSE(apply_pdt(t, U"00").exhausted);
    for (std::size_t n = 0; n <= 64; ++n)
        CHECK(apply_pdt(t, Word(n, U'0') + U'1').words == Words{Word(n, U'0') + Word(n, U'1')});
}

TEST_CASE("T2")
{
    const Pdt t = fx::t2();
    CHECK(t.deterministic());
    CHECK(apply_pdt(t, U"00110").words == Words{U"00110011"});
    CHECK(apply_pdt(t, U"0").words.empty());
    CHECK(apply_pdt(t, U"0011").words.empty());
    for (std::size_t n = 1; n <= 32; ++n) {
        const Word b = Word(n, U'0') + Word(n, U'1');
        CHECK(apply_pdt(t, b + U'0').words == Words{b + b});
    }
}

TEST_CASE("T3")
{
    const Pdt t = fx::t3();
    CHECK(t.deterministic());
    CHECK(apply_pdt(t, U"01c10c").words == Words{U"01c10c01c10c"});
    CHECK(apply_pdt(t, U"01c10").words.empty());
    CHECK(apply_pdt(t, U"cc").words.empty());
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : gen::all_words(U"01", n)) {
            const Word x = w + U'c' + reversed(w) + U'c';
            CHECK(apply_pdt(t, x).words == Words{x + x});
        }
}

TEST_CASE("T4")
{
    const TwoWayFst t = fx::t4();
    CHECK(t.states == 4);
    CHECK(t.finals == std::set<State>{4});
    CHECK(t.deterministic());
    CHECK(apply_2fst(t, U"a01b").words == Words{U"a01a01"});
    CHECK(apply_2fst(t, U"ab").words == Words{U"aa"});
    CHECK(apply_2fst(t, U"01").words.empty());
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : gen::all_words(U"01", n))
            CHECK(apply_2fst(t, U'a' + w + U'b').words == Words{U'a' + w + U'a' + w});
}

TEST_CASE("fixture domains reject malformed inputs")
{
    for (const auto& w : gen::all_words_upto(U"01", 7)) {
        const bool in_l1 = !w.empty() && w.back() == U'1' && w.find(U'1') == w.size() - 1;
        CHECK(apply_pdt(fx::t1(), w).words.empty() != in_l1);
    }
    for (const auto& w : gen::all_words_upto(U"01", 7)) {
        std::size_t n = 0;
        while (n < w.size() && w[n] == U'0')
            ++n;
        const bool in_l2 = n >= 1 && w == Word(n, U'0') + Word(n, U'1') + U'0';
        // T2 accepts 0⁺1⁺0 without comparing the block lengths.
        std::size_t ones = 0;
        while (n + ones < w.size() && w[n + ones] == U'1')
            ++ones;
        const bool shaped = n >= 1 && ones >= 1 && n + ones + 1 == w.size() && w.back() == U'0';
        if (in_l2)
            CHECK_FALSE(apply_pdt(fx::t2(), w).words.empty());
        if (!shaped)
            CHECK(apply_pdt(fx::t2(), w).words.empty());
    }
    // No a-prefix, no b, or b before the end.
    for (Word w : {Word(U"0b"), Word(U"a0"), Word(U"b"), Word(U"")})
        CHECK(apply_2fst(fx::t4(), w).words.empty());
    for (Word w : {Word(U"0c1"), Word(U"01c"), Word(U"c"), Word(U"")})
        CHECK(apply_pdt(fx::t3(), w).words.empty());
}

TEST_CASE("deterministic transducers yield at most one output")
{
    gen::Rng rng(21);
    for (const auto& w : gen::all_words_upto(U"01c", 6)) {
        CHECK(apply_pdt(fx::t3(), w).words.size() <= 1);
        CHECK(apply_pdt(fx::t1(), gen::random_word(rng, U"01", w.size())).words.size() <= 1);
    }
    for (const auto& w : gen::all_words_upto(U"01ab", 5))
        CHECK(apply_2fst(fx::t4(), w).words.size() <= 1);
}

TEST_CASE("normal form and determinism flags")
{
    CHECK_FALSE(fx::t1().normal_form());
    Pdt nf;
    nf.states = 2;
    nf.input = {U'0'};
    nf.output = {U'1'};
    nf.stack = {kBottom, U'x'};
    nf.finals = {2};
    nf.transitions = {{1, U'0', U"1", U"", U"x", 1}, {2, kLambda, U"", U"x", U"", 2}};
    CHECK(nf.normal_form());
    CHECK(nf.deterministic());
    nf.transitions.push_back({2, U'0', U"", U"$", U"$", 2});
    CHECK(nf.deterministic());
    nf.transitions.push_back({1, kLambda, U"", U"x", U"", 2});
    CHECK_FALSE(nf.deterministic());
}

TEST_CASE("two-way runs die at the ends")
{
    TwoWayFst t;
    t.states = 2;
    t.input = {U'0'};
    t.output = {U'1'};
    t.finals = {2};
    t.transitions = {{1, U'0', U"1", Move::L, 2}};
    CHECK(apply_2fst(t, U"0").words.empty());
    t.transitions = {{1, U'0', U"1", Move::M, 2}};
    CHECK(apply_2fst(t, U"0").words == Words{U"1"});
    t.transitions = {{1, U'0', U"1", Move::R, 2}};
    CHECK(apply_2fst(t, U"0").words == Words{U"1"});
}

TEST_CASE("output budget exhaustion is distinct from an empty image")
{
    Fst looping;
    looping.states = 1;
    looping.input = {U'0'};
    looping.output = {U'1'};
    looping.finals = {};
    looping.transitions = {{1, kLambda, U"1", 1}};
    auto r = apply_fst(looping, U"0", {500, 0});
    CHECK(r.words.empty());
    CHECK(r.exhausted);
}

TEST_CASE("encoder 2PDT")
{
    const TwoWayPdt enc = encoding::build_encoder_2pdt();
    CHECK_NOTHROW(enc.validate());
    const auto r = encoding::rep_list(fx::m_odd());
    for (Word w : {Word(U"01"), Word(U""), Word(U"0"), Word(U"110")})
        CHECK(apply_2pdt(enc, encoding::encoder_input(r, w)).words == Words{encoding::encode_input(r, w)});
    CHECK(apply_2pdt(enc, encoding::encoder_input(r, U"0")).words ==
          Words{U"0%" + encoding::sigma_encode(r) + U"T"});
    CHECK(apply_2pdt(enc, U"##").words.empty());
    CHECK(apply_2pdt(enc, encoding::serialize_section(r)).words.empty());
}

TEST_CASE("fst_image")
{
    gen::Rng rng(22);
    Fst t;
    t.states = 2;
    t.input = {U'a', U'b'};
    t.output = {U'x', U'y'};
    t.finals = {1};
    t.transitions = {{1, U'a', U"xy", 1}, {1, U'b', U"", 2}, {2, kLambda, U"y", 1}};
    for (int trial = 0; trial < 40; ++trial) {
        const Nfa a = gen::random_nfa(rng, 4, U"ab", true);
        Words direct;
        for (const auto& w : enumerate_language(a, 5))
            for (auto& o : apply_fst(t, w).words)
                if (o.size() <= 6)
                    direct.push_back(o);
        sort_length_lex(direct);
        direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
        // Every output of length ≤ 6 comes from an input of length ≤ 6.
        Words longer;
        for (const auto& w : enumerate_language(a, 6))
            for (auto& o : apply_fst(t, w).words)
                if (o.size() <= 6)
                    longer.push_back(o);
        sort_length_lex(longer);
        longer.erase(std::unique(longer.begin(), longer.end()), longer.end());
        CHECK(enumerate_language(fst_image(t, a), 6) == longer);
        CHECK(std::includes(longer.begin(), longer.end(), direct.begin(), direct.end(), length_lex_less));
    }
}
