#pragma once

#include "uniauto/automata.hpp"
#include "uniauto/transducers.hpp"

namespace uniauto {

/// Equivalent Nfa without λ-moves (same states; a state becomes final when
/// its λ-closure contains a final state).
Nfa remove_lambda(const Nfa& r);

/// Pushdown automaton for L(p) ∩ L(r). Product state (i, j) gets index
/// (i-1)*r.states + j, so (1, 1) stays initial; the stack is driven by p
/// alone. r must be λ-free and over the same input alphabet as p.
Pda intersect_pda_nfa(const Pda& p, const Nfa& r);

/// Nfa over t.output for the image of L(a) under t. Multi-symbol outputs
/// become chains of fresh states; the result may contain λ-moves.
Nfa fst_image(const Fst& t, const Nfa& a);

}  // namespace uniauto
