#include "uniauto/gadgets.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "uniauto/fixtures.hpp"
#include "uniauto/oracle.hpp"
#include "uniauto/product.hpp"

namespace uniauto::gadgets {

using fixtures::kFinalMarker;
using fixtures::kInitialMarker;
using fixtures::kSeparator;

bool MuIndex::grouped_equal() const
{
    for (std::size_t g = 0; g < 12; g += 3)
        if (v[g] != v[g + 1] || v[g] != v[g + 2])
            return false;
    return true;
}

std::string MuIndex::to_string() const
{
    std::string s = "(";
    for (std::size_t n = 0; n < v.size(); ++n)
        s += (n ? "," : "") + std::to_string(v[n]);
    return s + ")";
}

namespace {

struct MuEdge {
    int from;
    int bit;
    int to;
};

std::array<MuEdge, 8> mu_edges(const MuIndex& mu)
{
    return {{
        {1, 0, mu.i()},
        {1, 1, mu.k()},
        {mu.i(1), 0, mu.j(1)},
        {mu.i(2), 1, mu.l(2)},
        {mu.k(2), 0, mu.j(2)},
        {mu.k(1), 1, mu.l(1)},
        {mu.j(), 0, 2},
        {mu.l(), 1, 2},
    }};
}

}  // namespace

Nfa build_mu_fa(const MuIndex& mu, int qmax)
{
    for (int x : mu.v)
        if (x < 3 || x > qmax)
            throw InputError("μ index " + std::to_string(x) + " outside 3.." + std::to_string(qmax));
    Nfa m;
    m.name = "M_mu" + mu.to_string();
    m.states = qmax;
    m.input = {U'0', U'1'};
    m.finals = {2};
    for (const auto& e : mu_edges(mu))
        m.transitions.push_back({e.from, static_cast<Symbol>(U'0' + e.bit), e.to});
    m.transitions.push_back({2, kLambda, 2});
    return m;
}

std::vector<Word> mu_target_language() { return {U"000", U"011", U"100", U"111"}; }

bool mu_language_is_target(const MuIndex& mu)
{
    const auto edges = mu_edges(mu);
    constexpr std::uint64_t final_bit = 1ULL << 2;
    // target words as (length 3, bits read left to right)
    auto is_target = [](int len, unsigned bits) {
        return len == 3 && (bits == 0b000 || bits == 0b011 || bits == 0b100 || bits == 0b111);
    };
    int hits = 0;
    bool ok = true;
    auto visit = [&](auto&& self, std::uint64_t mask, int len, unsigned bits) -> void {
        if (!ok)
            return;
        if (mask & final_bit) {
            if (!is_target(len, bits)) {
                ok = false;
                return;
            }
            ++hits;
        }
        if (len == 6)
            return;
        for (int b = 0; b < 2; ++b) {
            std::uint64_t next = 0;
            for (const auto& e : edges)
                if (e.bit == b && (mask >> e.from & 1))
                    next |= 1ULL << e.to;
            if (next)
                self(self, next, len + 1, bits << 1 | static_cast<unsigned>(b));
        }
    };
    visit(visit, 1ULL << 1, 0, 0);
    return ok && hits == 4;
}

MuVerdict verify_mu_theorem(int qmax, unsigned threads)
{
    if (qmax < 3 || qmax > 63)
        throw InputError("verify_mu_theorem: qmax must be in 3..63");
    const int range = qmax - 2;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(range));

    // Worker t handles the tuples whose first index is 3 + t (mod threads).
    auto work = [&](unsigned t) {
        MuVerdict r;
        for (int first = 3 + static_cast<int>(t); first <= qmax; first += static_cast<int>(threads)) {
            MuIndex mu;
            mu.v.fill(3);
            mu.v[0] = first;
            while (true) {
                ++r.checked;
                const bool grouped = mu.grouped_equal();
                const bool target = mu_language_is_target(mu);
                r.target_hits += target;
                r.grouped_misses += grouped && !target;
                if (target && !grouped && r.confirmed) {
                    r.confirmed = false;
                    r.counterexample = mu;
                }
                std::size_t pos = 11;
                while (pos > 0 && mu.v[pos] == qmax)
                    mu.v[pos--] = 3;
                if (pos == 0)
                    break;
                ++mu.v[pos];
            }
        }
        return r;
    };

    std::vector<MuVerdict> parts(threads);
    if (threads == 1) {
        parts[0] = work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { parts[t] = work(t); });
        for (auto& th : pool)
            th.join();
    }
    MuVerdict total;
    for (const auto& p : parts) {
        total.checked += p.checked;
        total.target_hits += p.target_hits;
        total.grouped_misses += p.grouped_misses;
        if (!p.confirmed) {
            total.confirmed = false;
            if (!total.counterexample || *p.counterexample < *total.counterexample)
                total.counterexample = p.counterexample;
        }
    }
    return total;
}

Alphabet representation_alphabet() { return {kInitialMarker, kFinalMarker, kSeparator, U'0', U'1'}; }

Nfa representation_nfa(std::size_t max_bits)
{
    // State layout: 1 start; then for c = 0..max_bits the states
    // in_w(c), in_v(c), plus after_gt(c).
    const auto b = static_cast<State>(max_bits);
    auto in_w = [](State c) { return 2 + 3 * c; };
    auto after_gt = [](State c) { return 3 + 3 * c; };
    auto in_v = [](State c) { return 4 + 3 * c; };
    Nfa m;
    m.name = "representations";
    m.states = 4 + 3 * b;
    m.input = representation_alphabet();
    m.transitions.push_back({1, kInitialMarker, in_w(0)});
    for (State c = 0; c <= b; ++c) {
        m.transitions.push_back({in_w(c), kFinalMarker, after_gt(c)});
        m.transitions.push_back({after_gt(c), kSeparator, in_v(c)});
        m.finals.insert(in_v(c));
        if (c < b)
            for (Symbol x : Word(U"01")) {
                m.transitions.push_back({in_w(c), x, in_w(c + 1)});
                m.transitions.push_back({in_v(c), x, in_v(c + 1)});
            }
    }
    return m;
}

Pda table_machine(const std::vector<Word>& words, const Alphabet& input)
{
    Pda m;
    m.name = "table";
    m.input = input;
    std::map<std::pair<State, Symbol>, State> child;
    for (const auto& w : words) {
        require_word_over(w, input);
        State cur = 1;
        for (Symbol s : w) {
            auto [it, fresh] = child.try_emplace({cur, s}, m.states + 1);
            if (fresh) {
                ++m.states;
                m.transitions.push_back({cur, s, U"", U"", it->second});
            }
            cur = it->second;
        }
        m.finals.insert(cur);
    }
    return m;
}

namespace {

Word only_output(const Fst& t, const Word& w, const char* what)
{
    auto out = apply_fst(t, w);
    if (out.words.size() != 1)
        throw InputError(std::string("refute_candidate: ") + what + " is not defined on '" + to_utf8(w) + "'");
    return out.words[0];
}

}  // namespace

Refutation refute_candidate(const Pda& u, const Fst& enc, const Fst& dec, std::size_t k)
{
    u.validate();
    if (!enc.deterministic() || !dec.deterministic())
        throw InputError("refute_candidate: enc and dec must be deterministic");
    for (Symbol s : representation_alphabet())
        if (!enc.input.contains(s))
            throw InputError("refute_candidate: enc does not read '" + symbol_name(s) + "'");

    constexpr std::size_t kIdentityCheckLength = 12;
    for (const auto& x : enumerate_language(representation_nfa(kIdentityCheckLength - 3), kIdentityCheckLength)) {
        const Word y = only_output(enc, x, "enc");
        if (only_output(dec, y, "dec") != x)
            throw InputError("refute_candidate: dec∘enc differs from the identity on '" + to_utf8(x) + "'");
    }

    // Words w#v with |w| + |v| + 1 ≤ k are the only ones that can land in
    // the compared range, so S is restricted to them.
    const std::size_t bits = k == 0 ? 0 : k - 1;
    const Nfa reps = representation_nfa(bits);
    std::size_t longest = 0;
    for (const auto& x : enumerate_language(reps, bits + 3))
        longest = std::max(longest, only_output(enc, x, "enc").size());

    Nfa s_nfa = remove_lambda(fst_image(enc, reps));
    s_nfa.input = u.input;
    std::erase_if(s_nfa.transitions, [&](const NfaTransition& t) { return !u.input.contains(t.input); });
    const Pda product = intersect_pda_nfa(u, s_nfa);

    const Fst psi = fixtures::psi();
    std::vector<Word> x;
    for (const auto& y : enumerate_language(product, longest)) {
        const Word z = only_output(psi, only_output(dec, y, "dec"), "psi");
        if (z.size() <= k)
            x.push_back(z);
    }
    sort_length_lex(x);

    std::vector<Word> required;
    for (std::size_t n = 0; 2 * n + 1 <= k; ++n)
        for (unsigned b = 0; b < (1u << n); ++b) {
            Word w;
            for (std::size_t p = 0; p < n; ++p)
                w += (b >> (n - 1 - p) & 1) ? U'1' : U'0';
            required.push_back(w + kSeparator + w);
        }
    sort_length_lex(required);

    const auto cmp = compare_word_sets(x, required);
    Refutation r;
    if (!cmp.equal) {
        r.found = true;
        r.counterexample = cmp.counterexample;
        r.produced = std::binary_search(x.begin(), x.end(), cmp.counterexample, length_lex_less);
    }
    return r;
}

Refutation refute_candidate(const Pda& u, std::size_t k)
{
    const Fst id = identity_fst(representation_alphabet());
    return refute_candidate(u, id, id, k);
}

}  // namespace uniauto::gadgets
