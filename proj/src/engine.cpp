#include "engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace uniauto::detail {

WordTrie::WordTrie() { nodes_.push_back({kLambda, kEmpty, 0}); }

WordTrie::Id WordTrie::cons(Id tail, Symbol head)
{
    const auto key = (static_cast<std::uint64_t>(tail) << 32) | static_cast<std::uint32_t>(head);
    auto [it, inserted] = index_.try_emplace(key, static_cast<Id>(nodes_.size()));
    if (inserted)
        nodes_.push_back({head, tail, nodes_[tail].length + 1});
    return it->second;
}

Word WordTrie::spell(Id id) const
{
    Word out;
    out.reserve(nodes_[id].length);
    for (; id != kEmpty; id = nodes_[id].tail)
        out += nodes_[id].head;
    return out;
}

Word WordTrie::spell_reversed(Id id) const
{
    Word out = spell(id);
    std::reverse(out.begin(), out.end());
    return out;
}

WordTrie::Id WordTrie::push(Id stack, const Word& top_first)
{
    for (auto it = top_first.rbegin(); it != top_first.rend(); ++it)
        stack = cons(stack, *it);
    return stack;
}

std::optional<WordTrie::Id> WordTrie::pop(Id stack, const Word& top_first) const
{
    for (Symbol s : top_first) {
        if (stack == kEmpty || nodes_[stack].head != s)
            return std::nullopt;
        stack = nodes_[stack].tail;
    }
    return stack;
}

WordTrie::Id WordTrie::append(Id word, const Word& suffix)
{
    for (Symbol s : suffix)
        word = cons(word, s);
    return word;
}

namespace {

struct Node {
    State state;
    std::uint32_t pos;
    WordTrie::Id stack;
    WordTrie::Id out;
    std::int32_t parent;
};

struct Key {
    std::uint64_t a;
    std::uint64_t b;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull;
        h ^= k.b + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

Key key_of(const Node& n)
{
    return {(static_cast<std::uint64_t>(static_cast<std::uint32_t>(n.state)) << 32) | n.pos,
            (static_cast<std::uint64_t>(n.stack) << 32) | n.out};
}

}  // namespace

EngineResult run_machine(const std::vector<Rule>& rules, int states, const std::set<State>& finals,
                         const Word& input, const EngineOptions& options)
{
    std::vector<std::vector<const Rule*>> by_state(static_cast<std::size_t>(states) + 1);
    for (const auto& r : rules)
        by_state.at(static_cast<std::size_t>(r.from)).push_back(&r);

    const auto n = static_cast<std::uint32_t>(input.size());
    WordTrie stacks;
    WordTrie outputs;
    std::vector<Node> nodes;
    std::unordered_set<Key, KeyHash> seen;
    std::unordered_set<WordTrie::Id> accepted_outputs;
    std::deque<std::int32_t> frontier;
    EngineResult result;
    std::int32_t accepting_node = -1;

    auto is_final = [&](State q) { return finals.count(q) != 0; };

    auto record = [&](Node node, bool by_stay) {
        if (!seen.insert(key_of(node)).second)
            return;
        nodes.push_back(node);
        const auto id = static_cast<std::int32_t>(nodes.size() - 1);
        if (is_final(node.state) && (node.pos == n || (options.two_way && by_stay))) {
            result.accepted = true;
            if (accepting_node < 0)
                accepting_node = id;
            accepted_outputs.insert(node.out);
        }
        frontier.push_back(id);
    };

    Node start{1, 0, options.uses_stack ? stacks.push(WordTrie::kEmpty, Word{kBottom}) : WordTrie::kEmpty,
               WordTrie::kEmpty, -1};
    record(start, false);

    while (!frontier.empty()) {
        if (result.accepted && options.stop_at_first_accept)
            break;
        if (result.steps == options.budget) {
            result.exhausted = true;
            break;
        }
        ++result.steps;
        const auto id = frontier.front();
        frontier.pop_front();
        const Node cur = nodes[static_cast<std::size_t>(id)];
        for (const Rule* r : by_state[static_cast<std::size_t>(cur.state)]) {
            if (r->input != kLambda && (cur.pos >= n || input[cur.pos] != r->input))
                continue;
            std::uint32_t pos = cur.pos;
            switch (r->move) {
            case Move::L:
                if (pos == 0)
                    continue;  // head underflow kills this run
                --pos;
                break;
            case Move::R:
                if (pos >= n)
                    continue;
                ++pos;
                break;
            case Move::M:
                break;
            }
            auto popped = stacks.pop(cur.stack, r->pop);
            if (!popped)
                continue;
            WordTrie::Id stack = *popped;
            if (!r->push.empty()) {
                if (stacks.length(stack) + r->push.size() > options.stack_cap) {
                    result.truncated = true;
                    continue;
                }
                stack = stacks.push(stack, r->push);
            }
            WordTrie::Id out = cur.out;
            if (options.collect_outputs && !r->output.empty())
                out = outputs.append(out, r->output);
            record(Node{r->to, pos, stack, out, id}, r->move == Move::M);
        }
    }

    if (options.collect_outputs) {
        for (auto o : accepted_outputs)
            result.outputs.push_back(outputs.spell_reversed(o));
        sort_length_lex(result.outputs);
    }
    if (options.want_witness && accepting_node >= 0) {
        for (auto i = accepting_node; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
            const auto& nd = nodes[static_cast<std::size_t>(i)];
            result.witness.push_back({nd.state, nd.pos, stacks.spell(nd.stack)});
        }
        std::reverse(result.witness.begin(), result.witness.end());
    }
    return result;
}

}  // namespace uniauto::detail
