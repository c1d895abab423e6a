// Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "uniauto/encoding.hpp"
#include "uniauto/fixtures.hpp"
#include "uniauto/gadgets.hpp"
#include "uniauto/oracle.hpp"
#include "uniauto/product.hpp"
#include "uniauto/simulate.hpp"
#include "uniauto/transducers.hpp"
#include "uniauto/transition_system.hpp"
#include "uniauto/universal.hpp"

using namespace uniauto;
namespace fx = uniauto::fixtures;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = r.ok && secs < limit_seconds;
    if (!pass)
        ++failures;
    std::printf("%s  %-26s %8.2f s (limit %g s)  %s\n", pass ? "PASS" : "FAIL", name.c_str(), secs, limit_seconds,
                r.detail.c_str());
    std::fflush(stdout);
}

std::string narrow(const Word& w)
{
    std::string s;
    for (Symbol c : w)
        s += c < 0x80 ? static_cast<char>(c) : '?';
    return s;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Outcome transducer_images()
{
    std::size_t cases = 0;
    auto expect = [&](const OutputSet& got, const Word& want, const char* which, const Word& in) -> std::string {
        ++cases;
        if (got.words == std::vector<Word>{want} && !got.exhausted)
            return {};
        return std::string(which) + " on " + narrow(in);
    };
    for (std::size_t n = 0; n <= 64; ++n) {
        const Word in = Word(n, U'0') + U'1';
        if (auto e = expect(apply_pdt(fx::t1(), in), Word(n, U'0') + Word(n, U'1'), "T1", in); !e.empty())
            return {false, e};
    }
    for (std::size_t n = 1; n <= 32; ++n) {
        const Word b = Word(n, U'0') + Word(n, U'1');
        if (auto e = expect(apply_pdt(fx::t2(), b + U'0'), b + b, "T2", b + U'0'); !e.empty())
            return {false, e};
    }
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& w : gen::all_words(U"01", n)) {
            const Word x = w + U'c' + reversed(w) + U'c';
            if (auto e = expect(apply_pdt(fx::t3(), x), x + x, "T3", x); !e.empty())
                return {false, e};
            const Word y = U'a' + w + U'b';
            if (auto e = expect(apply_2fst(fx::t4(), y), U'a' + w + U'a' + w, "T4", y); !e.empty())
                return {false, e};
        }
    return {true, std::to_string(cases) + " inputs"};
}

Outcome sigma_round_trip()
{
    std::size_t cases = 0;
    for (State i = 1; i <= 6; ++i)
        for (Symbol y : {U'0', U'1'})
            for (int j = 0; j <= 6; ++j)
                for (int k = 0; k <= 6; ++k)
                    for (State l = 1; l <= 6; ++l) {
                        const encoding::RepTuple t{i, y, j, k, l};
                        ++cases;
                        if (encoding::sigma_decode(encoding::sigma_encode(t)) != t)
                            return {false, "grid tuple failed"};
                    }
    gen::Rng rng(1001);
    for (int n = 0; n < 1000; ++n) {
        const auto t = gen::random_tuple(rng, 50);
        ++cases;
        if (encoding::sigma_decode(encoding::sigma_encode(t)) != t)
            return {false, "random tuple failed"};
    }
    return {true, std::to_string(cases) + " tuples"};
}

Outcome encoder_equivalence()
{
    const TwoWayPdt enc = encoding::build_encoder_2pdt();
    gen::Rng rng(1002);
    std::size_t runs = 0;
    for (int n = 0; n < 100; ++n) {
        const Pda m = gen::random_lettering_pda(rng, gen::uniform(rng, 2, 5), gen::uniform(rng, 0, 3),
                                                gen::uniform(rng, 0, 8));
        const auto r = encoding::rep_list(m);
        for (const auto& w : gen::all_words_upto(U"01", 8)) {
            ++runs;
            const auto out = apply_2pdt(enc, encoding::encoder_input(r, w));
            if (out.exhausted || out.words != std::vector<Word>{encoding::encode_input(r, w)})
                return {false, "machine " + std::to_string(n) + ", w = " + narrow(w)};
        }
    }
    return {true, "100 machines, " + std::to_string(runs) + " runs"};
}

Outcome universality()
{
    const UniversalPda u = build_universal_pda();
    const auto fp = fingerprint(u.machine);
    std::vector<Pda> machines{fx::m_odd(), fx::m01()};
    gen::Rng rng(1003);
    for (int n = 0; n < 3; ++n)
        machines.push_back(gen::random_lettering_pda(rng, gen::uniform(rng, 2, 4), gen::uniform(rng, 0, 3),
                                                     gen::uniform(rng, 2, 8)));
    machines.push_back(gen::random_lettering_pda(rng, 9, 3, 10, true));
    std::size_t words = 0;
    for (std::size_t i = 0; i < machines.size(); ++i)
        for (const auto& w : gen::all_words_upto(U"01", 10)) {
            ++words;
            const auto direct = pda_accepts(machines[i], w);
            const auto via_u = universal_run(u, machines[i], w);
            if (direct.outcome == uniauto::Outcome::budget_exhausted ||
                via_u.outcome == uniauto::Outcome::budget_exhausted)
                return {false, "budget exhausted on machine " + std::to_string(i) + ", w = " + narrow(w)};
            if (direct.outcome != via_u.outcome)
                return {false, "disagreement on machine " + std::to_string(i) + ", w = " + narrow(w)};
        }
    if (fingerprint(u.machine) != fp)
        return {false, "U changed during the run"};
    return {true, std::to_string(machines.size()) + " machines, " + std::to_string(words) + " words, U has " +
                      std::to_string(u.machine.states) + " states"};
}

std::string mu_summary(int qmax, const gadgets::MuVerdict& v)
{
    std::ostringstream s;
    s << "qmax " << qmax << ": ";
    if (v.confirmed)
        s << "confirmed over " << v.checked << " tuples";
    else
        s << "counterexample " << v.counterexample->to_string() << " after " << v.checked << " tuples";
    return s.str();
}

Outcome mu_brute_force()
{
    const auto start = std::chrono::steady_clock::now();
    const auto five = gadgets::verify_mu_theorem(5, 1);
    const double five_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto six = gadgets::verify_mu_theorem(6, 0);
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << mu_summary(5, five) << " in " << five_secs << " s; " << mu_summary(6, six);
    const bool ok = five.confirmed && five.checked == 531441 && five_secs < 60 && six.confirmed;
    return {ok, d.str()};
}

Outcome unary_counterexample()
{
    gen::Rng rng(1004);
    std::size_t witnesses = 0;
    for (int n = 0; n < 100; ++n) {
        const FiniteTs t = gen::random_finite_ts(rng, 8, U'a');
        const auto r = reg_universality_counterexample(t, U'a');
        if (r.n > static_cast<std::size_t>(t.states) || r.witnesses.size() != r.n)
            return {false, "bad bound on system " + std::to_string(n)};
        const std::size_t bound = 3 * static_cast<std::size_t>(t.states) + 3;
        for (std::size_t m = 0; m < r.n; ++m) {
            ++witnesses;
            if (ts_language_upto(t.system(), std::vector<State>{r.witnesses[m]}, bound) !=
                std::vector<Word>{Word(m, U'a')})
                return {false, "witness for m = " + std::to_string(m) + " on system " + std::to_string(n)};
        }
        for (State s = 1; s <= t.states; ++s)
            if (ts_language_upto(t.system(), std::vector<State>{s}, bound) == std::vector<Word>{Word(r.n, U'a')})
                return {false, "n not least on system " + std::to_string(n)};
    }
    return {true, "100 systems, " + std::to_string(witnesses) + " witnesses"};
}

Outcome product()
{
    gen::Rng rng(1005);
    for (int n = 0; n < 200; ++n) {
        const Pda p = gen::random_decidable_pda(rng, 4, U"01", 6);
        const Nfa r = remove_lambda(gen::random_nfa(rng, 4, U"01", true));
        const auto lp = enumerate_language(p, 6);
        const auto lr = enumerate_language(r, 6);
        std::vector<Word> both;
        std::set_intersection(lp.begin(), lp.end(), lr.begin(), lr.end(), std::back_inserter(both), length_lex_less);
        if (enumerate_language(intersect_pda_nfa(p, r), 6) != both)
            return {false, "pair " + std::to_string(n)};
    }
    return {true, "200 pairs"};
}

}  // namespace

int main()
{
    criterion("transducer images", 5, transducer_images);
    criterion("sigma round-trip", 1, sigma_round_trip);
    criterion("encoder equivalence", 60, encoder_equivalence);
    criterion("universality", 120, universality);
    criterion("M_mu brute force", 900, mu_brute_force);
    criterion("unary counterexample", 5, unary_counterexample);
    criterion("product construction", 30, product);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
