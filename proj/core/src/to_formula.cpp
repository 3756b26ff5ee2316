#include "alba/to_formula.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "alba/gf_form.hpp"

namespace alba {

namespace {

class StateFormulas {
public:
  explicit StateFormulas(const BuchiAutomaton& a)
      : a_(a), scc_(scc_decompose(a)) {}

  Formula of(int state) {
    auto it = memo_.find(state);
    if (it != memo_.end()) return it->second;

    const SccComponent& comp =
        scc_.components[static_cast<std::size_t>(scc_.component_of[state])];

    Formula result;
    if (const GFForm* form = annotation_of(comp)) {
      result = gf_form_to_formula(*form);
    } else if (comp.states.size() > 1 && comp.terminal) {
      // A multi-state cycle cannot be unfolded by the recursion; only its
      // annotation can name the language.
      throw std::invalid_argument(
          "to-formula: terminal component without a gf annotation (state '" +
          a_.state_name(comp.states.front()) + "')");
    } else {
      // Singletons are handled by the until formula even when their exits
      // are unsatisfiable (the disjuncts then contribute nothing).
      result = transient_formula(state, comp);
    }
    memo_.emplace(state, result);
    return result;
  }

private:
  const GFForm* annotation_of(const SccComponent& comp) const {
    // Unsatisfiable guards can split an annotated component into smaller
    // pieces at the letter level; every state of the annotated set accepts
    // the annotation's language, so a subset match is enough.
    for (const GFAnnotation& ann : a_.annotations()) {
      if (std::includes(ann.states.begin(), ann.states.end(),
                        comp.states.begin(), comp.states.end())) {
        return &ann.form;
      }
    }
    return nullptr;
  }

  Formula transient_formula(int state, const SccComponent& comp) {
    if (comp.states.size() != 1) {
      throw std::invalid_argument(
          "to-formula: non-terminal component with " +
          std::to_string(comp.states.size()) +
          " states; automaton is not almost linear");
    }
    if (!on_path_.insert(state).second) {
      // Only reachable through unsatisfiable transition records; live
      // cycles would have merged the states into one component.
      throw std::invalid_argument(
          "to-formula: cyclic dead transitions between transient states");
    }
    std::vector<Formula> loop_guards;
    std::vector<Formula> exits;
    for (const auto* e : a_.edges_from(state)) {
      if (e->dst == state) {
        loop_guards.push_back(e->guard);
      } else if (satisfiable(e->guard, a_.alphabet())) {
        // Dead exits would only contribute vacuous disjuncts; live ones
        // lead strictly down the condensation, so recursion terminates.
        exits.push_back(make_and(e->guard, make_next(of(e->dst))));
      }
    }
    on_path_.erase(state);
    Formula stay = fold_or(loop_guards);
    Formula leave = fold_or(exits);
    Formula result = stay.kind() == Kind::False ? leave
                                                : make_until(stay, leave);
    if (a_.is_accepting(state)) {
      result = make_or(result, make_always(stay));
    }
    return result;
  }

  const BuchiAutomaton& a_;
  SccDecomposition scc_;
  std::map<int, Formula> memo_;
  std::set<int> on_path_;
};

}  // namespace

Formula state_formula(const BuchiAutomaton& a, int state) {
  if (state < 0 || state >= a.state_count()) {
    throw std::invalid_argument("to-formula: state index out of range");
  }
  return StateFormulas(a).of(state);
}

Formula automaton_to_formula(const BuchiAutomaton& a) {
  BuchiAutomaton trimmed = trim_reachable(a);
  return StateFormulas(trimmed).of(trimmed.initial());
}

}  // namespace alba
