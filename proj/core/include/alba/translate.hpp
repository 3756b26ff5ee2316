// Direct translation of positive LIO formulas into almost linear Buchi
// automata.
//
// The translation rests on a one-step decomposition of a formula into
// finitely many guarded successor obligations,
//
//     phi  ==  OR over (alpha, S) of  ( alpha  &  X AND S ),
//
// with every guard modality free.  Iterating the decomposition from {phi}
// yields a "concise" automaton whose states are formula sets; sets
// consisting solely of G alpha / GF alpha members loop onto themselves
// forever and are labelled with the corresponding GF form instead of being
// expanded on the spot.  Replacing each labelled state by a terminal
// component (see expansion.hpp) produces the final automaton, which is
// structurally almost linear by construction: outside the labelled states
// the successor sets strictly decrease in the set-size order, so every
// non-terminal cycle is a self-loop.

#ifndef ALBA_TRANSLATE_HPP
#define ALBA_TRANSLATE_HPP

#include <map>
#include <vector>

#include "alba/automaton.hpp"
#include "alba/expansion.hpp"
#include "alba/formula.hpp"
#include "alba/gf_form.hpp"

namespace alba {

struct GuardedStep {
  Formula guard;     // modality free
  FormulaSet next;   // obligations for the rest of the word
};

// Deduplicated, canonically ordered.
using Decomposition = std::vector<GuardedStep>;

// One-step decomposition of a positive LIO formula.  Throws
// std::invalid_argument when the formula is not positive LIO.
Decomposition decompose(const Formula& f);

// Decomposition of a formula set, i.e. of the conjunction of its members;
// the empty set yields {(tt, {})}.
Decomposition decompose(const FormulaSet& s);

// Intermediate form: states are formula sets reachable from {phi}; states
// of shape {G a, ..., GF b, ...} carry their GF form instead of outgoing
// structure of their own.
struct ConciseAutomaton {
  Alphabet alphabet;
  std::vector<FormulaSet> states;  // discovery order, initial first
  int initial = 0;
  struct Edge {
    int src;
    Formula guard;  // merged by disjunction per (src, dst)
    int dst;
  };
  std::vector<Edge> edges;        // sorted by (src, dst)
  std::map<int, GFForm> labels;   // terminal labels
};

ConciseAutomaton build_concise(const Formula& f);

// Concise form rendered as an automaton: labelled states become accepting
// states annotated with their GF form.  For inspection; its language as a
// plain Buchi automaton is NOT the translated formula's.
BuchiAutomaton concise_to_automaton(const ConciseAutomaton& c);

// Full translation: build_concise, then replace every labelled state by a
// terminal component under the chosen strategy.  Incoming edges enter the
// component at its empty-progress state.  The input must be positive LIO.
BuchiAutomaton translate(const Formula& f,
                         ExpansionStrategy strategy = ExpansionStrategy::Shortcut);

}  // namespace alba

#endif  // ALBA_TRANSLATE_HPP
