#pragma once

#include <cstdint>
#include <utility>

#include "uniauto/automata.hpp"
#include "uniauto/encoding.hpp"

namespace uniauto {

/// The fixed universal machine over {0,1,A,B,D,P,S,%,T} with stack
/// alphabet {S,A,P,B,$}. In the read phase its stack is S Aᵐ (P Bⁿ)* $:
/// the simulated state index followed by the simulated stack, top first.
struct UniversalPda {
    Pda machine;
    State start = 1;
    State read = 0;
    State match0 = 0;
    State match1 = 0;
    State accept_scan = 0;
    State accept = 0;
    State sink = 0;
};

UniversalPda build_universal_pda();

/// Variant whose input symbols are whole transition tuples rather than
/// their σ-blocks. Stack symbols are the states 1..q_size, '$' and the
/// stack symbols of indices 2..delta_size. Throws InputError for sizes < 2.
Pda build_symbolic_upda(int q_size, int delta_size);

/// Input symbol standing for the tuple (source, y, pop, push, target).
Symbol tuple_symbol(int q_size, int delta_size, const encoding::RepTuple& t);
/// Finality marker closing each tuple section of a symbolic input.
Symbol symbolic_marker_symbol();
/// Stack symbol for simulated state q in the symbolic variant.
Symbol symbolic_state_symbol(State q);
/// Number of distinct tuple symbols: q·2·(δ+1)²·q.
std::size_t symbolic_tuple_count(int q_size, int delta_size);

/// (q_size, delta_size) used for m: its state and stack alphabet counts,
/// each at least 2.
std::pair<int, int> symbolic_sizes(const Pda& m);

/// x₁ τ x₂ τ … xₙ % τ where τ lists the tuple symbols of rep_list(m)
/// followed by the marker symbol, over the alphabet of
/// build_symbolic_upda at symbolic_sizes(m).
Word symbolic_input(const Pda& m, const Word& w);

/// Runs U on encode_input(rep_list(m), w). Throws InputError if m is not
/// lettering or violates the representation conventions.
Verdict universal_run(const UniversalPda& u, const Pda& m, const Word& w, const SearchLimits& limits = {});

/// Order-sensitive hash of a machine's full description.
std::uint64_t fingerprint(const Pda& m);

}  // namespace uniauto
