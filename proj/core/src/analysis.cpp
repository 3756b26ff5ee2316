// SCC decomposition, class checks, lasso acceptance, and reachability
// trimming over BuchiAutomaton.

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "alba/automaton.hpp"

namespace alba {

namespace {

// Tarjan over an adjacency list.  Components come out in completion order,
// which is reverse topological: a component only reaches components that
// appear before it.
std::vector<std::vector<int>> tarjan_sccs(
    const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;

  std::function<void(int)> visit = [&](int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : adj[v]) {
      if (index[w] == -1) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> scc;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc.push_back(w);
      } while (w != v);
      std::sort(scc.begin(), scc.end());
      sccs.push_back(std::move(scc));
    }
  };

  for (int v = 0; v < n; ++v) {
    if (index[v] == -1) visit(v);
  }
  return sccs;
}

// Adjacency over states, keeping only edges whose guard admits a letter.
std::vector<std::vector<int>> live_adjacency(const BuchiAutomaton& a) {
  std::vector<std::vector<int>> adj(a.state_count());
  for (const auto& e : a.edges()) {
    if (satisfiable(e.guard, a.alphabet())) adj[e.src].push_back(e.dst);
  }
  return adj;
}

}  // namespace

SccDecomposition scc_decompose(const BuchiAutomaton& a) {
  const auto adj = live_adjacency(a);
  SccDecomposition out;
  auto sccs = tarjan_sccs(adj);
  out.component_of.assign(a.state_count(), -1);
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    for (int s : sccs[c]) out.component_of[s] = static_cast<int>(c);
  }

  std::set<std::pair<int, int>> cond;
  for (int s = 0; s < a.state_count(); ++s) {
    for (int t : adj[s]) {
      int cs = out.component_of[s], ct = out.component_of[t];
      if (cs != ct) cond.insert({cs, ct});
    }
  }
  out.condensation.assign(cond.begin(), cond.end());

  out.components.reserve(sccs.size());
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    SccComponent comp;
    comp.states = std::move(sccs[c]);
    comp.terminal = std::none_of(
        out.condensation.begin(), out.condensation.end(),
        [&](const auto& e) { return e.first == static_cast<int>(c); });
    comp.has_accepting = std::any_of(comp.states.begin(), comp.states.end(),
                                     [&](int s) { return a.is_accepting(s); });
    if (comp.states.size() == 1) {
      int s = comp.states.front();
      bool loop = std::find(adj[s].begin(), adj[s].end(), s) != adj[s].end();
      comp.trivial = !loop;
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

AutomatonClass classify_automaton(const BuchiAutomaton& a) {
  AutomatonClass out;
  const SccDecomposition d = scc_decompose(a);

  // terminal: every accepting state has, under each letter, at least one
  // successor and only accepting successors.
  out.terminal = true;
  const std::uint32_t letters = a.alphabet().letter_count();
  for (int p : a.accepting()) {
    auto outgoing = a.edges_from(p);
    std::vector<std::vector<bool>> tables;
    tables.reserve(outgoing.size());
    for (const auto* e : outgoing) {
      tables.push_back(truth_table(e->guard, a.alphabet()));
    }
    for (std::uint32_t e = 0; e < letters && out.terminal; ++e) {
      bool any = false;
      for (std::size_t i = 0; i < outgoing.size(); ++i) {
        if (!tables[i][e]) continue;
        any = true;
        if (!a.is_accepting(outgoing[i]->dst)) {
          out.terminal = false;
          break;
        }
      }
      if (!any) out.terminal = false;
    }
    if (!out.terminal) break;
  }

  out.weak = true;
  std::size_t max_scc = 0;
  for (const auto& comp : d.components) {
    max_scc = std::max(max_scc, comp.states.size());
    bool all_acc = std::all_of(comp.states.begin(), comp.states.end(),
                               [&](int s) { return a.is_accepting(s); });
    bool none_acc = std::none_of(comp.states.begin(), comp.states.end(),
                                 [&](int s) { return a.is_accepting(s); });
    if (!all_acc && !none_acc) out.weak = false;
  }
  if (out.weak) out.min_k = static_cast<int>(max_scc);
  out.linear = out.weak && max_scc <= 1;

  out.structural_alba = std::all_of(
      d.components.begin(), d.components.end(), [](const SccComponent& c) {
        return c.terminal || c.states.size() == 1;
      });
  return out;
}

bool accepts_lasso(const BuchiAutomaton& a, const LassoWord& w) {
  if (!w.alphabet.contains_all(a.alphabet().atoms())) {
    throw std::invalid_argument(
        "accepts_lasso: word alphabet does not cover the automaton's");
  }
  const int positions = static_cast<int>(w.prefix.size() + w.period.size());
  const int p = static_cast<int>(w.prefix.size());
  const int n = a.state_count();
  auto node = [&](int s, int i) { return s * positions + i; };
  auto succ_pos = [&](int i) { return i + 1 == positions ? p : i + 1; };

  // Guard truth per edge per position, over the word's alphabet.
  std::vector<std::vector<bool>> active(a.edges().size(),
                                        std::vector<bool>(positions));
  for (std::size_t k = 0; k < a.edges().size(); ++k) {
    for (int i = 0; i < positions; ++i) {
      active[k][i] = eval_letter(a.edges()[k].guard,
                                 w.at(static_cast<std::size_t>(i)),
                                 w.alphabet);
    }
  }

  // Reachable part of the product, then cycle search through accepting rows.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) * positions);
  std::vector<bool> reached(adj.size(), false);
  std::vector<int> worklist{node(a.initial(), 0)};
  reached[worklist.front()] = true;
  while (!worklist.empty()) {
    int v = worklist.back();
    worklist.pop_back();
    int s = v / positions, i = v % positions;
    for (std::size_t k = 0; k < a.edges().size(); ++k) {
      const auto& e = a.edges()[k];
      if (e.src != s || !active[k][i]) continue;
      int u = node(e.dst, succ_pos(i));
      adj[v].push_back(u);
      if (!reached[u]) {
        reached[u] = true;
        worklist.push_back(u);
      }
    }
  }
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!reached[v]) adj[v].clear();
  }

  for (const auto& scc : tarjan_sccs(adj)) {
    if (!reached[scc.front()]) continue;
    bool cyclic = scc.size() > 1;
    if (!cyclic) {
      int v = scc.front();
      cyclic = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
    }
    if (!cyclic) continue;
    for (int v : scc) {
      if (a.is_accepting(v / positions)) return true;
    }
  }
  return false;
}

BuchiAutomaton trim_reachable(const BuchiAutomaton& a) {
  const auto adj = live_adjacency(a);
  std::vector<bool> reached(a.state_count(), false);
  std::vector<int> worklist{a.initial()};
  reached[a.initial()] = true;
  while (!worklist.empty()) {
    int s = worklist.back();
    worklist.pop_back();
    for (int t : adj[s]) {
      if (!reached[t]) {
        reached[t] = true;
        worklist.push_back(t);
      }
    }
  }

  std::vector<int> remap(a.state_count(), -1);
  std::vector<std::string> names;
  for (int s = 0; s < a.state_count(); ++s) {
    if (reached[s]) {
      remap[s] = static_cast<int>(names.size());
      names.push_back(a.state_name(s));
    }
  }
  std::vector<BuchiAutomaton::Edge> edges;
  for (const auto& e : a.edges()) {
    if (reached[e.src] && reached[e.dst]) {
      edges.push_back({remap[e.src], e.guard, remap[e.dst]});
    }
  }
  std::vector<int> accepting;
  for (int s : a.accepting()) {
    if (reached[s]) accepting.push_back(remap[s]);
  }
  std::vector<GFAnnotation> annotations;
  for (const auto& ann : a.annotations()) {
    // The annotation speaks about each state individually, so it survives
    // restricted to the reachable ones.
    GFAnnotation copy;
    copy.form = ann.form;
    for (int s : ann.states) {
      if (reached[s]) copy.states.push_back(remap[s]);
    }
    if (!copy.states.empty()) annotations.push_back(std::move(copy));
  }
  return BuchiAutomaton(a.alphabet(), std::move(names), remap[a.initial()],
                        std::move(edges), std::move(accepting),
                        std::move(annotations));
}

}  // namespace alba
