#pragma once

#include <vector>

#include "uniauto/automata.hpp"
#include "uniauto/transducers.hpp"

namespace uniauto::encoding {

/// Stack components are indices: 0 is λ, 1 is '$', 2.. the remaining stack
/// symbols in alphabet order.
inline constexpr int kLambdaIndex = 0;
inline constexpr int kBottomIndex = 1;

/// (source, input bit, popped, pushed, target).
struct RepTuple {
    State source = 1;
    Symbol input = U'0';
    int pop = kLambdaIndex;
    int push = kLambdaIndex;
    State target = 1;

    auto operator<=>(const RepTuple&) const = default;
};

/// Ordered transition list of a lettering PDA over {0,1}. State 1 is
/// initial, state 2 the unique final state. The last element is a marker
/// (2, 0, λ, λ, 2) that records finality; it is not a move of the machine.
struct Representation {
    std::vector<RepTuple> tuples;

    bool operator==(const Representation&) const = default;

    /// Indices ≥ 1, bits in {0,1}, marker in last position.
    void validate() const;
    static RepTuple marker() { return {2, U'0', kLambdaIndex, kLambdaIndex, 2}; }
};

/// Stack symbol used by reconstruct() for an index ≥ 1.
Symbol stack_symbol_for_index(int index);

/// Renumbers states (initial → 1, final → 2, the rest in ascending order)
/// and appends the marker. Throws InputError unless m is lettering over
/// {0,1} with a single final state, distinct from the initial one and
/// reachable from it.
Representation rep_list(const Pda& m);

/// Inverse of rep_list up to state and stack-symbol renaming.
Pda reconstruct(const Representation& r);

/// Representation over {q, a, x, *}: state q_k as q·aᵏ, the m-th input
/// symbol as x·aᵐ, λ as *.
Word rep_word_generic(const Nfa& m);

/// Nfa for (q a⁺ (x a⁺ ∪ *) q a⁺)⁺, the set of all such representations.
Nfa generic_representation_set();

using SigmaWord = Word;

/// D S Aⁱ y P Bʲ P Bᵏ S Aˡ for (qᵢ, y, δⱼ, δₖ, qₗ). Throws InputError for a
/// state index below 1, a negative stack index or a non-bit input.
SigmaWord sigma_encode(const RepTuple& t);
/// Concatenation of the blocks of every tuple, marker included.
SigmaWord sigma_encode(const Representation& r);

/// Exact inverse of sigma_encode on a single block.
RepTuple sigma_decode(const SigmaWord& block);

/// Splits a concatenation of blocks. The split is forced: each block starts
/// with D and no block contains D elsewhere. Throws InputError otherwise.
std::vector<RepTuple> parse_sigma_blocks(const SigmaWord& word);

/// x₁ σ(R) T x₂ σ(R) T … xₙ % σ(R) T; for the empty word, % σ(R) T.
SigmaWord encode_input(const Representation& r, const Word& w);

struct EncodedInput {
    Word bits;
    std::vector<std::vector<RepTuple>> sections;
};

/// Parses (bit block⁺ T)* bit? % block⁺ T. Throws InputError on mismatch.
EncodedInput parse_encoded_input(const SigmaWord& word);

/// Input section consumed by the encoder transducer: a leading T sentinel
/// followed by σ(R).
Word serialize_section(const Representation& r);

/// serialize_section(r) · '#' · w
Word encoder_input(const Representation& r, const Word& w);

/// Two-way pushdown transducer computing encode_input from encoder_input.
/// For each xᵢ it prints xᵢ, walks left to '#' pushing one counter per
/// symbol of x₁…xᵢ, walks back to the sentinel, copies σ(R) and a T, then
/// returns to xᵢ₊₁ by popping the counters. Whether xᵢ is the last symbol is
/// guessed; wrong guesses cannot reach an accepting configuration, so the
/// output set is a singleton on well-formed input.
TwoWayPdt build_encoder_2pdt();

}  // namespace uniauto::encoding
