#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "uniauto/automata.hpp"
#include "uniauto/transducers.hpp"

namespace uniauto::fixtures {

/// Markers that φ puts around a word: φ(w) = '<' w '>'.
inline constexpr Symbol kInitialMarker = U'<';
inline constexpr Symbol kFinalMarker = U'>';
/// Separator between a representation and its input.
inline constexpr Symbol kSeparator = U'#';

/// {0ⁿ1ⁿ : n ≥ 0}. States: 1 pushes, 2 final, 3 pops.
Pda d01();
/// Lettering machine for words with an odd number of 1s (states 1 even, 2 odd).
Pda m_odd();
Nfa m_odd_nfa();
/// Lettering machine for {0ⁿ1ⁿ0 : n ≥ 1}.
Pda m01();
/// Lettering machine for {0ⁿ1ⁿ : n ≥ 1}; the first 0 pushes a distinct
/// bottom counter.
Pda anbn();

/// Deterministic pushdown transducer mapping 0ⁿ1 to 0ⁿ1ⁿ.
/// Final state is q2 (index 3).
Pdt t1();
/// 0ⁿ1ⁿ0 ↦ 0ⁿ1ⁿ0ⁿ1ⁿ.
Pdt t2();
/// w c wᴿ c ↦ (w c wᴿ c)². The c after w is pushed and the final phase pops
/// with output.
Pdt t3();
/// Two-way DFST a w b ↦ a w a w. Final state is q3 (index 4).
TwoWayFst t4();
/// w ↦ '<' w '>'. Three states: the closing marker is written by a λ-move
/// into the final state, so the machine is functional but not deterministic.
Fst phi();
/// Erases '<' and '>', copies 0, 1 and '#'.
Fst psi();

using TransducerFixture = std::variant<Pdt, TwoWayFst, Fst>;

/// One of T1, T2, T3, T4, phi, psi. Throws InputError for other names.
TransducerFixture transducer_fixture(std::string_view name);
std::vector<std::string_view> transducer_fixture_names();

/// Runs the fixture on w with the matching apply_* function.
OutputSet apply_fixture(const TransducerFixture& fixture, const Word& w, const SearchLimits& limits = {});

}  // namespace uniauto::fixtures
