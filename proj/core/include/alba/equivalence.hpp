// Bounded semantic checks over lasso-word families.
//
// A family enumerates every lasso word with prefix length <= max_prefix and
// period length in 1..max_period over a fixed alphabet, in a deterministic
// order.  Two sides (formulas or automata) are bounded-equivalent when they
// agree on every word of the family; the first disagreement is returned as
// a witness.  Verdicts are per-word exact, so a counterexample is always
// sound; agreement on a family is evidence, not a proof.

#ifndef ALBA_EQUIVALENCE_HPP
#define ALBA_EQUIVALENCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alba/automaton.hpp"
#include "alba/formula.hpp"
#include "alba/semantics.hpp"

namespace alba {

struct LassoFamily {
  Alphabet alphabet;
  std::size_t max_prefix = 3;
  std::size_t max_period = 3;  // >= 1

  // Sum over p <= max_prefix, 1 <= q <= max_period of |letters|^(p+q).
  std::uint64_t size() const;
};

// The whole family, ordered by (prefix length, period length, prefix
// letters lexicographically, period letters lexicographically).
std::vector<LassoWord> enumerate_lassos(const LassoFamily& fam);

// Visits the family in the same order; stops early when the visitor
// returns false.
void for_each_lasso(const LassoFamily& fam,
                    const std::function<bool(const LassoWord&)>& visit);

using Side = std::variant<Formula, BuchiAutomaton>;

// Membership of one lasso word on a side.
bool side_accepts(const Side& side, const LassoWord& w);

struct EquivReport {
  bool equivalent = false;
  std::optional<LassoWord> witness;  // first disagreement
  bool witness_lhs = false;          // lhs verdict on the witness
  LassoFamily family;
  std::uint64_t checked = 0;

  std::string str() const;
};

// Throws std::invalid_argument when a side uses atoms outside the family's
// alphabet.
EquivReport bounded_equiv(const Side& lhs, const Side& rhs,
                          const LassoFamily& fam);

// The two-part almost-linearity check: the structural half is
// classify_automaton's, the semantic half checks, per terminal component,
// that all member states are pairwise bounded-equivalent as initial states
// and match the component's annotation when one is present.  The semantic
// verdict is bounded by the family.
struct AlbaCheck {
  bool structural = false;
  bool semantic = false;   // bounded verdict, relative to `family`
  LassoFamily family;
  std::vector<std::string> details;  // one line per finding
};

AlbaCheck alba_check(const BuchiAutomaton& a, const LassoFamily& fam);

// Seeded random positive-LIO formula with at most max_size nodes over the
// given atoms.  Same seed, same formula.
Formula random_lio(std::uint64_t seed, std::size_t max_size,
                   const std::vector<std::string>& atoms);

}  // namespace alba

#endif  // ALBA_EQUIVALENCE_HPP
