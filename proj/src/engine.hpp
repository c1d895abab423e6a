#pragma once

// Configuration-graph search shared by the automaton and transducer
// simulators. Not part of the public interface.

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "uniauto/automata.hpp"

namespace uniauto::detail {

/// Hash-consed cons cells over symbols. Node 0 is the empty word; every
/// other node is (head, tail). Equal words get equal ids, so ids can be
/// used directly as dedup keys.
class WordTrie {
public:
    using Id = std::uint32_t;
    static constexpr Id kEmpty = 0;

    WordTrie();

    Id cons(Id tail, Symbol head);
    Symbol head(Id id) const { return nodes_[id].head; }
    Id tail(Id id) const { return nodes_[id].tail; }
    std::uint32_t length(Id id) const { return nodes_[id].length; }

    /// Symbols from id towards the root (head first).
    Word spell(Id id) const;
    /// Reverse of spell(): the word built by repeated appends.
    Word spell_reversed(Id id) const;

    /// Pushes a top-first string: push("0$") leaves '0' on top.
    Id push(Id stack, const Word& top_first);
    /// Pops a top-first prefix; nullopt when it does not match.
    std::optional<Id> pop(Id stack, const Word& top_first) const;
    Id append(Id word, const Word& suffix);

private:
    struct Node {
        Symbol head;
        Id tail;
        std::uint32_t length;
    };
    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, Id> index_;
};

struct Rule {
    State from = 1;
    Symbol input = kLambda;
    Word output;
    Word pop;
    Word push;
    Move move = Move::R;
    State to = 1;
};

struct EngineOptions {
    bool two_way = false;
    bool uses_stack = false;
    bool collect_outputs = false;
    bool stop_at_first_accept = true;
    bool want_witness = false;
    std::size_t budget = 100000;
    std::size_t stack_cap = 64;
};

struct EngineResult {
    bool accepted = false;
    /// The step budget ran out with unexplored configurations.
    bool exhausted = false;
    /// Some successor was dropped for exceeding the stack cap.
    bool truncated = false;
    std::size_t steps = 0;
    std::vector<Word> outputs;  // length-lex, deduplicated
    std::vector<PdaConfig> witness;
};

std::vector<Rule> rules_of(const Pda& m);

/// Breadth-first search over (state, head position, stack, output) with
/// deduplication. One-way machines use Move::R for consuming moves and
/// Move::M for λ-moves. Acceptance: a final state with the head past the last
/// symbol, or (two-way only) a final state entered by a stay move.
EngineResult run_machine(const std::vector<Rule>& rules, int states, const std::set<State>& finals,
                         const Word& input, const EngineOptions& options);

}  // namespace uniauto::detail
