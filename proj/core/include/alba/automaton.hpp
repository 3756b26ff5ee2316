// Buchi automata with guarded transitions.
//
// A transition carries a modality-free guard over the automaton's alphabet
// and stands for one edge per letter satisfying the guard.  At most one
// transition per (src, dst) pair is stored; parallel edges given at
// construction are merged by guard disjunction.  Automata are immutable
// after construction and all analyses are pure functions.

#ifndef ALBA_AUTOMATON_HPP
#define ALBA_AUTOMATON_HPP

#include <optional>
#include <string>
#include <vector>

#include "alba/formula.hpp"
#include "alba/gf_form.hpp"
#include "alba/semantics.hpp"

namespace alba {

// GF-form attached to the states of one terminal component.
struct GFAnnotation {
  std::vector<int> states;  // sorted state indices
  GFForm form;
};

class BuchiAutomaton {
public:
  struct Edge {
    int src;
    Formula guard;
    int dst;
  };

  BuchiAutomaton(Alphabet alphabet, std::vector<std::string> state_names,
                 int initial, std::vector<Edge> edges,
                 std::vector<int> accepting,
                 std::vector<GFAnnotation> annotations = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int state_count() const noexcept {
    return static_cast<int>(state_names_.size());
  }
  const std::vector<std::string>& state_names() const noexcept {
    return state_names_;
  }
  const std::string& state_name(int s) const { return state_names_.at(s); }
  std::optional<int> index_of(const std::string& name) const;

  int initial() const noexcept { return initial_; }

  // Sorted by (src, dst); at most one edge per pair.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<const Edge*> edges_from(int s) const;

  const std::vector<int>& accepting() const noexcept { return accepting_; }
  bool is_accepting(int s) const;

  const std::vector<GFAnnotation>& annotations() const noexcept {
    return annotations_;
  }

private:
  Alphabet alphabet_;
  std::vector<std::string> state_names_;
  int initial_;
  std::vector<Edge> edges_;
  std::vector<int> accepting_;  // sorted
  std::vector<GFAnnotation> annotations_;
};

// Same automaton with a different initial state.
BuchiAutomaton with_initial(const BuchiAutomaton& a, int initial);

// -- Strongly connected components -----------------------------------------
//
// Components are numbered in reverse topological order of the condensation
// (a component only reaches components with smaller numbers).  Edges whose
// guard is unsatisfiable over the alphabet carry no letters and do not
// count as graph edges.

struct SccComponent {
  std::vector<int> states;      // sorted
  bool terminal = false;        // no transition leaves the component
  bool has_accepting = false;
  bool trivial = false;         // single state without a (satisfiable) loop
};

struct SccDecomposition {
  std::vector<SccComponent> components;
  std::vector<int> component_of;                 // state -> component id
  std::vector<std::pair<int, int>> condensation; // edges, deduplicated
};

SccDecomposition scc_decompose(const BuchiAutomaton& a);

// -- Structural classes -----------------------------------------------------

struct AutomatonClass {
  bool terminal = false;  // each accepting state is total and stays accepting
  bool weak = false;      // every SCC homogeneous w.r.t. acceptance
  bool linear = false;    // 1-weak: every cycle is a loop
  std::optional<int> min_k;  // smallest k with the automaton k-weak
  bool structural_alba = false;  // every non-terminal SCC is a singleton
};

AutomatonClass classify_automaton(const BuchiAutomaton& a);

// True iff the automaton has an accepting run over u v^w.  Works on the
// product of states and lasso positions and looks for a reachable cycle
// through an accepting state.
bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w);

// Drops states unreachable from the initial state (over satisfiable
// guards).  Annotations whose components survive are kept.
BuchiAutomaton trim_reachable(const BuchiAutomaton& a);

// Structural identity: same alphabet, state names in the same order, same
// initial, edge-for-edge equal guards, same accepting set (and same
// annotations unless with_annotations is false).
bool same_structure(const BuchiAutomaton& a, const BuchiAutomaton& b,
                    bool with_annotations = true);

}  // namespace alba

#endif  // ALBA_AUTOMATON_HPP
