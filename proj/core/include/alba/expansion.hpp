// Expansion of a GF form G a0 & GF a1 & ... & GF an into a concrete
// terminal Buchi component.  Three constructions:
//
//   Cycle     one state per pending obligation, a single cycle; fewest
//             transitions (n+1 states, 2n+1 transitions).
//   Shortcut  same states, but each letter advances greedily past every
//             obligation it satisfies; keeps product cycles short while
//             staying linear in states.  Deterministic by construction.
//   Subset    states are the subsets of obligations met since the last
//             reset; shortest product cycles, 2^n states.
//
// Every state of an expansion accepts exactly the language of the GF form,
// so any of them can serve as the component's entry; the empty-progress
// state (w0, or the empty subset) is the canonical entry.

#ifndef ALBA_EXPANSION_HPP
#define ALBA_EXPANSION_HPP

#include <string>
#include <vector>

#include "alba/automaton.hpp"
#include "alba/gf_form.hpp"

namespace alba {

enum class ExpansionStrategy { Cycle, Shortcut, Subset };

const char* strategy_name(ExpansionStrategy s) noexcept;

// Component laid out as states/edges with local indices, for standalone
// automata and for splicing into a larger one.
struct ComponentPlan {
  std::vector<std::string> names;  // local state names
  std::vector<BuchiAutomaton::Edge> edges;
  int entry = 0;      // empty-progress state
  int accepting = 0;  // the single accepting state
};

ComponentPlan plan_component(const GFForm& rho, ExpansionStrategy strategy,
                             const std::string& name_prefix = {});

// Standalone expansion over the GF form's own atoms (alpha0 first).
BuchiAutomaton expand(const GFForm& rho, ExpansionStrategy strategy);

// Expansion over a caller-provided alphabet (must cover the form's atoms).
BuchiAutomaton expand(const GFForm& rho, ExpansionStrategy strategy,
                      const Alphabet& alphabet);

}  // namespace alba

#endif  // ALBA_EXPANSION_HPP
