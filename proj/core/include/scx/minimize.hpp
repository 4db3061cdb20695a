#pragma once

#include "scx/dfa.hpp"

namespace scx {

/// Restricts d to the states reachable from its start state, numbered in
/// breadth-first order (symbols scanned in increasing index order). The
/// result is the canonical form used for isomorphism checks.
Dfa trim(const Dfa& d);

/// Minimal complete DFA for L(d) in canonical numbering.
///
/// Trims d, then refines the partition {F, Q \ F} by successor-block
/// membership (Moore refinement) until it is stable, and renumbers the
/// quotient breadth-first. The empty language yields one non-final sink; Σ*
/// yields one final state.
Dfa minimize(const Dfa& d);

/// L(a) == L(b), decided by searching the synchronized product for a
/// reachable pair that disagrees on finality. Throws AlphabetMismatch.
bool equivalent(const Dfa& a, const Dfa& b);

/// Equal canonical forms, finals included.
bool isomorphic(const Dfa& a, const Dfa& b);

}  // namespace scx
