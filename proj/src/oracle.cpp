#include "uniauto/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "engine.hpp"
#include "uniauto/simulate.hpp"

namespace uniauto {

namespace {

struct MaskNfa {
    std::vector<std::uint64_t> closure;               // per state
    std::vector<std::vector<std::uint64_t>> step;     // [symbol index][state]
    std::uint64_t finals = 0;
};

std::uint64_t close(const MaskNfa& a, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (; mask != 0; mask &= mask - 1)
        out |= a.closure[static_cast<std::size_t>(__builtin_ctzll(mask))];
    return out;
}

MaskNfa to_masks(const Nfa& m)
{
    // bit q-1 stands for state q
    const auto n = static_cast<std::size_t>(m.states);
    MaskNfa a;
    std::vector<std::uint64_t> lambda(n, 0);
    for (const auto& t : m.transitions)
        if (t.input == kLambda)
            lambda[static_cast<std::size_t>(t.from - 1)] |= 1ull << (t.to - 1);
    a.closure.assign(n, 0);
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t reach = 1ull << q;
        std::uint64_t prev = 0;
        while (reach != prev) {
            prev = reach;
            for (std::uint64_t r = reach; r != 0; r &= r - 1)
                reach |= lambda[static_cast<std::size_t>(__builtin_ctzll(r))];
        }
        a.closure[q] = reach;
    }
    a.step.assign(m.input.size(), std::vector<std::uint64_t>(n, 0));
    for (const auto& t : m.transitions)
        if (t.input != kLambda)
            a.step[m.input.index_of(t.input) - 1][static_cast<std::size_t>(t.from - 1)] |= 1ull << (t.to - 1);
    for (State f : m.finals)
        a.finals |= 1ull << (f - 1);
    return a;
}

void dfs_masks(const MaskNfa& a, const Alphabet& sigma, std::uint64_t set, Word& prefix, std::size_t max_len,
               std::vector<Word>& out)
{
    if (set & a.finals)
        out.push_back(prefix);
    if (prefix.size() == max_len)
        return;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        std::uint64_t next = 0;
        for (std::uint64_t s = set; s != 0; s &= s - 1)
            next |= a.step[i][static_cast<std::size_t>(__builtin_ctzll(s))];
        if (next == 0)
            continue;
        prefix.push_back(sigma.symbols()[i]);
        dfs_masks(a, sigma, close(a, next), prefix, max_len, out);
        prefix.pop_back();
    }
}

void brute_force(const Nfa& m, Word& prefix, std::size_t max_len, std::vector<Word>& out)
{
    if (fa_accepts(m, prefix))
        out.push_back(prefix);
    if (prefix.size() == max_len)
        return;
    for (Symbol s : m.input) {
        prefix.push_back(s);
        brute_force(m, prefix, max_len, out);
        prefix.pop_back();
    }
}

class PdaEnumerator {
public:
    PdaEnumerator(const Pda& m, const SearchLimits& limits, std::size_t max_len)
        : m_(m), budget_(limits.budget), cap_(limits.cap_for(max_len)), max_len_(max_len)
    {
        by_state_.resize(static_cast<std::size_t>(m.states) + 1);
        for (const auto& t : m.transitions)
            by_state_[static_cast<std::size_t>(t.from)].push_back(&t);
    }

    std::vector<Word> run()
    {
        Configs start{{1, stacks_.push(detail::WordTrie::kEmpty, Word{kBottom})}};
        Word prefix;
        visit(closure(std::move(start)), prefix);
        sort_length_lex(out_);
        return out_;
    }

private:
    using Config = std::pair<State, detail::WordTrie::Id>;
    using Configs = std::vector<Config>;

    struct ConfigHash {
        std::size_t operator()(const Config& c) const noexcept
        {
            return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(c.first) << 32) | c.second);
        }
    };

    void charge()
    {
        if (++steps_ > budget_)
            throw BudgetExhausted("language enumeration exceeded its budget of " + std::to_string(budget_) +
                                  " configurations");
    }

    bool apply(const PdaTransition& t, detail::WordTrie::Id stack, detail::WordTrie::Id& result)
    {
        auto popped = stacks_.pop(stack, t.pop);
        if (!popped)
            return false;
        if (stacks_.length(*popped) + t.push.size() > cap_)
            throw BudgetExhausted("language enumeration exceeded the stack cap of " + std::to_string(cap_));
        result = stacks_.push(*popped, t.push);
        return true;
    }

    Configs closure(Configs seeds)
    {
        std::unordered_set<Config, ConfigHash> seen(seeds.begin(), seeds.end());
        Configs out;
        while (!seeds.empty()) {
            Config c = seeds.back();
            seeds.pop_back();
            charge();
            out.push_back(c);
            for (const PdaTransition* t : by_state_[static_cast<std::size_t>(c.first)]) {
                detail::WordTrie::Id next;
                if (t->input == kLambda && apply(*t, c.second, next)) {
                    Config nc{t->to, next};
                    if (seen.insert(nc).second)
                        seeds.push_back(nc);
                }
            }
        }
        return out;
    }

    void visit(const Configs& configs, Word& prefix)
    {
        if (std::any_of(configs.begin(), configs.end(), [&](const Config& c) { return m_.finals.count(c.first); }))
            out_.push_back(prefix);
        if (prefix.size() == max_len_)
            return;
        for (Symbol a : m_.input) {
            std::unordered_set<Config, ConfigHash> seen;
            Configs next;
            for (const auto& c : configs)
                for (const PdaTransition* t : by_state_[static_cast<std::size_t>(c.first)]) {
                    detail::WordTrie::Id stack;
                    if (t->input == a && apply(*t, c.second, stack)) {
                        Config nc{t->to, stack};
                        if (seen.insert(nc).second)
                            next.push_back(nc);
                    }
                }
            if (next.empty())
                continue;
            prefix.push_back(a);
            visit(closure(std::move(next)), prefix);
            prefix.pop_back();
        }
    }

    const Pda& m_;
    std::vector<std::vector<const PdaTransition*>> by_state_;
    detail::WordTrie stacks_;
    std::size_t budget_;
    std::size_t cap_;
    std::size_t max_len_;
    std::size_t steps_ = 0;
    std::vector<Word> out_;
};

}  // namespace

std::vector<Word> enumerate_language(const Nfa& m, std::size_t max_len)
{
    std::vector<Word> out;
    Word prefix;
    if (m.states <= 64) {
        auto a = to_masks(m);
        dfs_masks(a, m.input, a.closure[0], prefix, max_len, out);
    } else {
        brute_force(m, prefix, max_len, out);
    }
    sort_length_lex(out);
    return out;
}

std::vector<Word> enumerate_language(const Pda& m, std::size_t max_len, const SearchLimits& limits)
{
    return PdaEnumerator(m, limits, max_len).run();
}

std::vector<Word> enumerate_language(const std::vector<Word>& words, std::size_t max_len)
{
    std::vector<Word> out;
    for (const auto& w : words)
        if (w.size() <= max_len)
            out.push_back(w);
    sort_length_lex(out);
    return out;
}

EqualityResult compare_word_sets(const std::vector<Word>& a, const std::vector<Word>& b)
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else {
            return {false, length_lex_less(a[i], b[j]) ? a[i] : b[j]};
        }
    }
    if (i < a.size())
        return {false, a[i]};
    if (j < b.size())
        return {false, b[j]};
    return {};
}

}  // namespace uniauto
