#pragma once

#include <vector>

#include "uniauto/automata.hpp"

namespace uniauto {

/// Subset simulation with λ-closure. Throws InputError for symbols outside
/// the input alphabet.
bool fa_accepts(const Nfa& m, const Word& w);

/// Successors of c under one move whose input component is next_input
/// (kLambda selects λ-moves, which leave the position unchanged).
std::vector<PdaConfig> pda_step(const Pda& m, const PdaConfig& c, Symbol next_input);

/// Breadth-first search of the configuration graph, deduplicated on
/// (state, position, stack). Accepts iff a final state is reached with all
/// input consumed. Reports budget-exhausted when the step budget runs out
/// with configurations left, or when a successor had to be dropped for
/// exceeding the stack cap and nothing accepted.
Verdict pda_accepts(const Pda& m, const Word& w, const SearchLimits& limits = {});

}  // namespace uniauto
