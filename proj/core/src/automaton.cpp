#include "alba/automaton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "alba/fragment.hpp"

namespace alba {

BuchiAutomaton::BuchiAutomaton(Alphabet alphabet,
                               std::vector<std::string> state_names,
                               int initial, std::vector<Edge> edges,
                               std::vector<int> accepting,
                               std::vector<GFAnnotation> annotations)
    : alphabet_(std::move(alphabet)),
      state_names_(std::move(state_names)),
      initial_(initial),
      accepting_(std::move(accepting)),
      annotations_(std::move(annotations)) {
  const int n = state_count();
  if (n == 0) throw std::invalid_argument("automaton: no states");
  for (int i = 0; i < n; ++i) {
    if (state_names_[i].empty()) {
      throw std::invalid_argument("automaton: empty state name");
    }
    for (int j = i + 1; j < n; ++j) {
      if (state_names_[i] == state_names_[j]) {
        throw std::invalid_argument("automaton: duplicate state name '" +
                                    state_names_[i] + "'");
      }
    }
  }
  if (initial_ < 0 || initial_ >= n) {
    throw std::invalid_argument("automaton: initial state out of range");
  }
  for (int s : accepting_) {
    if (s < 0 || s >= n) {
      throw std::invalid_argument("automaton: accepting state out of range");
    }
  }
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()),
                   accepting_.end());

  // Merge parallel edges by guard disjunction, in input order.
  std::map<std::pair<int, int>, Formula> merged;
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      throw std::invalid_argument("automaton: transition endpoint out of range");
    }
    if (!modality_free(e.guard)) {
      throw std::invalid_argument("automaton: guard contains a modality: " +
                                  e.guard.str());
    }
    if (!alphabet_.contains_all(e.guard.atoms())) {
      throw std::invalid_argument("automaton: guard atom outside alphabet: " +
                                  e.guard.str());
    }
    auto key = std::make_pair(e.src, e.dst);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, e.guard);
    } else {
      it->second = guard_or(it->second, e.guard);
    }
  }
  edges_.reserve(merged.size());
  for (auto& [key, guard] : merged) {
    edges_.push_back(Edge{key.first, guard, key.second});
  }

  for (auto& ann : annotations_) {
    std::sort(ann.states.begin(), ann.states.end());
    ann.states.erase(std::unique(ann.states.begin(), ann.states.end()),
                     ann.states.end());
    for (int s : ann.states) {
      if (s < 0 || s >= n) {
        throw std::invalid_argument("automaton: annotation state out of range");
      }
    }
    if (!alphabet_.contains_all(ann.form.alpha0.atoms())) {
      throw std::invalid_argument(
          "automaton: annotation atom outside alphabet");
    }
    for (const Formula& a : ann.form.alphas) {
      if (!alphabet_.contains_all(a.atoms())) {
        throw std::invalid_argument(
            "automaton: annotation atom outside alphabet");
      }
    }
  }
}

std::optional<int> BuchiAutomaton::index_of(const std::string& name) const {
  for (int i = 0; i < state_count(); ++i) {
    if (state_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<const BuchiAutomaton::Edge*> BuchiAutomaton::edges_from(
    int s) const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_) {
    if (e.src == s) out.push_back(&e);
  }
  return out;
}

bool BuchiAutomaton::is_accepting(int s) const {
  return std::binary_search(accepting_.begin(), accepting_.end(), s);
}

BuchiAutomaton with_initial(const BuchiAutomaton& a, int initial) {
  return BuchiAutomaton(a.alphabet(), a.state_names(), initial, a.edges(),
                        a.accepting(), a.annotations());
}

bool same_structure(const BuchiAutomaton& a, const BuchiAutomaton& b,
                    bool with_annotations) {
  if (a.alphabet() != b.alphabet()) return false;
  if (a.state_names() != b.state_names()) return false;
  if (a.initial() != b.initial()) return false;
  if (a.accepting() != b.accepting()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    const auto& ea = a.edges()[i];
    const auto& eb = b.edges()[i];
    if (ea.src != eb.src || ea.dst != eb.dst || ea.guard != eb.guard) {
      return false;
    }
  }
  if (!with_annotations) return true;
  if (a.annotations().size() != b.annotations().size()) return false;
  for (std::size_t i = 0; i < a.annotations().size(); ++i) {
    const auto& xa = a.annotations()[i];
    const auto& xb = b.annotations()[i];
    if (xa.states != xb.states || !(xa.form == xb.form)) return false;
  }
  return true;
}

}  // namespace alba
