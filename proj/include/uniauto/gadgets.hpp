#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uniauto/automata.hpp"
#include "uniauto/transducers.hpp"

namespace uniauto::gadgets {

/// (i, i′, i″, j, j′, j″, k, k′, k″, ℓ, ℓ′, ℓ″), each in 3..qmax.
struct MuIndex {
    std::array<int, 12> v{3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};

    int i(int prime = 0) const { return v[static_cast<std::size_t>(prime)]; }
    int j(int prime = 0) const { return v[static_cast<std::size_t>(3 + prime)]; }
    int k(int prime = 0) const { return v[static_cast<std::size_t>(6 + prime)]; }
    int l(int prime = 0) const { return v[static_cast<std::size_t>(9 + prime)]; }

    /// i = i′ = i″, j = j′ = j″, k = k′ = k″ and ℓ = ℓ′ = ℓ″.
    bool grouped_equal() const;
    std::string to_string() const;

    auto operator<=>(const MuIndex&) const = default;
};

/// Nine-transition automaton over {0,1}: states 1..qmax, final {2}, with the
/// λ-loop on state 2. Throws InputError for an index outside 3..qmax.
Nfa build_mu_fa(const MuIndex& mu, int qmax);

/// {000, 011, 100, 111}
std::vector<Word> mu_target_language();

/// L(M_μ) up to length 6 equals mu_target_language(). Bitmask evaluation
/// that agrees with languages_equal_upto on build_mu_fa.
bool mu_language_is_target(const MuIndex& mu);

struct MuVerdict {
    bool confirmed = true;
    /// Least μ (lexicographic) whose language is the target set although
    /// its groups are not equal.
    std::optional<MuIndex> counterexample;
    std::uint64_t checked = 0;
    /// μ whose language is the target set.
    std::uint64_t target_hits = 0;
    /// μ with equal groups whose language differs from the target set.
    std::uint64_t grouped_misses = 0;
};

/// Exhaustive check over all (qmax − 2)¹² index tuples that
/// L(M_μ) = {000, 011, 100, 111} implies equal groups. threads = 0 uses
/// the hardware concurrency. Throws InputError for qmax < 3.
MuVerdict verify_mu_theorem(int qmax, unsigned threads = 1);

/// {'<', '>', '#', '0', '1'}
Alphabet representation_alphabet();

/// Nfa for '<' w '>' '#' v with w, v over {0,1} and |w| + |v| ≤ max_bits.
Nfa representation_nfa(std::size_t max_bits);

/// Pda accepting exactly the given words (a trie with no stack use).
Pda table_machine(const std::vector<Word>& words, const Alphabet& input);

struct Refutation {
    bool found = false;
    /// Length-lex least w#v on which the candidate disagrees with {w#w}.
    Word counterexample;
    /// Whether the counterexample was produced by the candidate (v ≠ w) or
    /// is a required word it missed.
    bool produced = false;
};

/// Bounded falsification of a universal candidate u. Computes
/// X = ψ(dec(L(u) ∩ enc(S))) for S the words '<' w '>' '#' v, and compares
/// its words of length ≤ k with {w#w : 2|w| + 1 ≤ k}. A returned
/// counterexample shows u is not universal under (enc, dec); none-found
/// proves nothing beyond bound k.
/// Throws InputError unless enc and dec are deterministic and dec(enc(x)) = x
/// for every representation word x of length ≤ 12.
Refutation refute_candidate(const Pda& u, const Fst& enc, const Fst& dec, std::size_t k);

/// refute_candidate with the identity encoding.
Refutation refute_candidate(const Pda& u, std::size_t k);

}  // namespace uniauto::gadgets
