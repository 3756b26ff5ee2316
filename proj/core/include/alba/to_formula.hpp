// Back-translation from (structurally) almost linear automata with
// GF-annotated terminal components to LIO formulas.
//
// A state inside a terminal component denotes its annotation's GF form.
// Any other state q is a singleton component; with loop guards a1..an and
// exit edges (b1,q1)..(bm,qm) it denotes
//
//     (a1 | ... | an) U (b1 & X phi(q1) | ... | bm & X phi(qm))
//
// with "| G (a1 | ... | an)" appended when q is accepting.  Empty
// disjunctions render as ff, and ff U p simplifies to p.

#ifndef ALBA_TO_FORMULA_HPP
#define ALBA_TO_FORMULA_HPP

#include "alba/automaton.hpp"
#include "alba/formula.hpp"

namespace alba {

// Formula of one state.  Throws std::invalid_argument when the automaton
// fails the structural check or a terminal component lacks an annotation.
Formula state_formula(const BuchiAutomaton& a, int state);

// Formula of the initial state after trimming to reachable states.
Formula automaton_to_formula(const BuchiAutomaton& a);

}  // namespace alba

#endif  // ALBA_TO_FORMULA_HPP
