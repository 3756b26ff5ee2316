#include "alba/translate.hpp"

#include <algorithm>
#include <stdexcept>

#include "alba/fragment.hpp"
#include "alba/normalize.hpp"

namespace alba {

namespace {

int step_compare(const GuardedStep& a, const GuardedStep& b) {
  int c = Formula::compare(a.guard, b.guard);
  if (c != 0) return c;
  if (a.next < b.next) return -1;
  if (b.next < a.next) return 1;
  return 0;
}

void canonicalize(Decomposition& d) {
  std::sort(d.begin(), d.end(), [](const GuardedStep& a, const GuardedStep& b) {
    return step_compare(a, b) < 0;
  });
  d.erase(std::unique(d.begin(), d.end(),
                      [](const GuardedStep& a, const GuardedStep& b) {
                        return step_compare(a, b) == 0;
                      }),
          d.end());
}

Decomposition merge(Decomposition a, const Decomposition& b) {
  a.insert(a.end(), b.begin(), b.end());
  canonicalize(a);
  return a;
}

Decomposition product(const Decomposition& a, const Decomposition& b) {
  Decomposition out;
  out.reserve(a.size() * b.size());
  for (const GuardedStep& x : a) {
    for (const GuardedStep& y : b) {
      FormulaSet next = x.next;
      for (const Formula& f : y.next) next.insert(f);
      out.push_back({guard_and(x.guard, y.guard), std::move(next)});
    }
  }
  canonicalize(out);
  return out;
}

Decomposition singleton(Formula guard, FormulaSet next) {
  Decomposition d;
  d.push_back({std::move(guard), std::move(next)});
  return d;
}

FormulaSet set_of(const Formula& f) {
  FormulaSet s;
  s.insert(f);
  return s;
}

Formula gf(const Formula& inner) {
  return make_always(make_eventually(inner));
}

Decomposition decompose_rec(const Formula& f);

// Pick the canonically greatest temporal element of the given kind;
// returns its index or -1.  Modality-free members never qualify: a letter
// formula that happens to be shaped like a conjunction or disjunction is
// plain alpha material, and splitting on it would stall the size measure.
int pick_last(const std::vector<Formula>& items, Kind kind) {
  int best = -1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].kind() != kind || modality_free(items[i])) continue;
    if (best < 0 || Formula::compare(items[static_cast<std::size_t>(best)],
                                     items[i]) <= 0) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<Formula> without(const std::vector<Formula>& items, int index) {
  std::vector<Formula> out;
  out.reserve(items.size() - 1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (static_cast<int>(i) != index) out.push_back(items[i]);
  }
  return out;
}

// G F inner with inner not modality free.
Decomposition decompose_gf(const Formula& whole, const Formula& inner) {
  switch (inner.kind()) {
    case Kind::Or:
      return merge(decompose_rec(gf(inner.child(0))),
                   decompose_rec(gf(inner.child(1))));
    case Kind::And: {
      // Flatten the conjunction and split off one non-LTL() conjunct,
      // preferring the shapes in the order or / F / G.
      std::vector<Formula> conj = flatten_and(inner);
      int idx = pick_last(conj, Kind::Or);
      if (idx >= 0) {
        Formula rest = fold_and(without(conj, idx));
        const Formula& disj = conj[static_cast<std::size_t>(idx)];
        return merge(
            decompose_rec(gf(make_and(rest, disj.child(0)))),
            decompose_rec(gf(make_and(rest, disj.child(1)))));
      }
      idx = pick_last(conj, Kind::Eventually);
      if (idx >= 0) {
        Formula rest = fold_and(without(conj, idx));
        const Formula& ev = conj[static_cast<std::size_t>(idx)];
        // GF(rest & F p) == GF rest & GF p
        return product(decompose_rec(gf(rest)),
                       decompose_rec(gf(ev.child(0))));
      }
      idx = pick_last(conj, Kind::Always);
      if (idx >= 0) {
        Formula rest = fold_and(without(conj, idx));
        const Formula& alw = conj[static_cast<std::size_t>(idx)];
        // GF(rest & G p) == GF rest & FG p
        return product(decompose_rec(gf(rest)),
                       decompose_rec(make_eventually(alw)));
      }
      throw std::logic_error("decompose: GF conjunction with no splittable "
                             "conjunct: " + whole.str());
    }
    case Kind::Eventually:  // GFF p == GF p
      return decompose_rec(gf(inner.child(0)));
    case Kind::Always:  // GFG p == FG p
      return decompose_rec(make_eventually(inner));
    default:
      throw std::logic_error("decompose: unexpected GF body: " + whole.str());
  }
}

// G body with body an Or, not modality free.
Decomposition decompose_g_or(const Formula& whole, const Formula& body) {
  std::vector<Formula> disj = flatten_or(body);

  int idx = pick_last(disj, Kind::And);
  if (idx >= 0) {
    Formula rest = fold_or(without(disj, idx));
    const Formula& cnj = disj[static_cast<std::size_t>(idx)];
    // G(rest | (p & q)) == G(rest | p) & G(rest | q)
    return product(decompose_rec(make_always(make_or(rest, cnj.child(0)))),
                   decompose_rec(make_always(make_or(rest, cnj.child(1)))));
  }

  idx = pick_last(disj, Kind::Eventually);
  if (idx >= 0) {
    Formula rest = fold_or(without(disj, idx));
    const Formula& ev = disj[static_cast<std::size_t>(idx)];
    // G(rest | F p) == G rest | tt U (p & X G rest) | GF p
    Formula until_part =
        make_until(make_true(),
                   make_and(ev.child(0), make_next(make_always(rest))));
    return merge(merge(decompose_rec(make_always(rest)),
                       decompose_rec(until_part)),
                 decompose_rec(gf(ev.child(0))));
  }

  // Remaining shapes: modality-free parts plus G-shaped disjuncts.
  std::vector<Formula> g_parts, ltl_parts;
  for (const Formula& d : disj) {
    if (d.kind() == Kind::Always) {
      g_parts.push_back(d);
    } else if (modality_free(d)) {
      ltl_parts.push_back(d);
    } else {
      throw std::logic_error("decompose: unexpected disjunct under G: " +
                             d.str());
    }
  }
  if (g_parts.empty()) {
    throw std::logic_error("decompose: G-disjunction without G part: " +
                           whole.str());
  }

  if (ltl_parts.empty()) {
    // G(Gp | Gq | ...) == Gp | Gq | ...
    Decomposition out;
    for (const Formula& g : g_parts) out = merge(out, decompose_rec(g));
    return out;
  }

  // G(alpha | G p1 | ... | G pk)
  //   == G alpha | OR_i G pi | OR_i (alpha & X G(alpha | G pi))
  Formula alpha = fold_or(ltl_parts);
  Decomposition out = decompose_rec(make_always(alpha));
  for (const Formula& g : g_parts) out = merge(out, decompose_rec(g));
  for (const Formula& g : g_parts) {
    // With a single G disjunct the loop successor is the input itself.
    Formula succ =
        g_parts.size() == 1 ? whole : make_always(make_or(alpha, g));
    out = merge(out, singleton(alpha, set_of(succ)));
  }
  return out;
}

Decomposition decompose_always(const Formula& f) {
  const Formula& body = f.child(0);
  if (modality_free(body)) {
    return singleton(body, set_of(f));  // G alpha keeps itself alive
  }
  switch (body.kind()) {
    case Kind::And:  // G(p & q) == Gp & Gq
      return product(decompose_rec(make_always(body.child(0))),
                     decompose_rec(make_always(body.child(1))));
    case Kind::Eventually: {
      const Formula& inner = body.child(0);
      if (modality_free(inner)) {
        return singleton(make_true(), set_of(f));  // GF alpha
      }
      return decompose_gf(f, inner);
    }
    case Kind::Or:
      return decompose_g_or(f, body);
    case Kind::Always:  // GG p == G p
      return decompose_rec(body);
    default:
      throw std::logic_error("decompose: unexpected body under G: " + f.str());
  }
}

Decomposition decompose_rec(const Formula& f) {
  if (modality_free(f)) {
    return singleton(f, FormulaSet{});
  }
  switch (f.kind()) {
    case Kind::Or:
      return merge(decompose_rec(f.child(0)), decompose_rec(f.child(1)));
    case Kind::And:
      return product(decompose_rec(f.child(0)), decompose_rec(f.child(1)));
    case Kind::Eventually:
      return merge(singleton(make_true(), set_of(f)),
                   decompose_rec(f.child(0)));
    case Kind::Next:
      return singleton(make_true(), FormulaSet::of_conjuncts(f.child(0)));
    case Kind::Until:
      return merge(singleton(f.child(0), set_of(f)),
                   decompose_rec(f.child(1)));
    case Kind::Always:
      return decompose_always(f);
    default:
      throw std::logic_error("decompose: unexpected formula: " + f.str());
  }
}

void require_positive_lio(const Formula& f, const char* who) {
  if (!is_positive_form(f)) {
    throw std::invalid_argument(std::string(who) +
                                ": formula not in positive form: " + f.str());
  }
  if (!classify_fragment(f).lio) {
    throw std::invalid_argument(std::string(who) +
                                ": formula not in LIO: " + f.str());
  }
}

// Recognize G alpha / GF alpha members and assemble the terminal label.
bool gf_state_label(const FormulaSet& s, GFForm& out) {
  std::vector<Formula> g_bodies;
  std::vector<Formula> recur;
  for (const Formula& f : s) {
    if (f.kind() != Kind::Always) return false;
    const Formula& body = f.child(0);
    if (modality_free(body)) {
      g_bodies.push_back(body);
    } else if (body.kind() == Kind::Eventually &&
               modality_free(body.child(0))) {
      recur.push_back(body.child(0));
    } else {
      return false;
    }
  }
  out = GFForm(fold_and(g_bodies), std::move(recur));
  return true;
}

}  // namespace

Decomposition decompose(const Formula& f) {
  require_positive_lio(f, "decompose");
  return decompose_rec(f);
}

Decomposition decompose(const FormulaSet& s) {
  for (const Formula& f : s) require_positive_lio(f, "decompose");
  Decomposition out = singleton(make_true(), FormulaSet{});
  for (const Formula& f : s) out = product(out, decompose_rec(f));
  return out;
}

ConciseAutomaton build_concise(const Formula& f) {
  require_positive_lio(f, "build_concise");

  ConciseAutomaton out;
  out.alphabet = Alphabet::of_formula(f);

  std::map<FormulaSet, int> index;
  auto intern = [&](const FormulaSet& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(out.states.size());
    index.emplace(s, id);
    out.states.push_back(s);
    return id;
  };

  std::map<std::pair<int, int>, Formula> merged_edges;

  intern(FormulaSet::of_conjuncts(f));
  for (int src = 0; src < static_cast<int>(out.states.size()); ++src) {
    // out.states grows while we scan it; index-based loop is deliberate.
    Decomposition steps = decompose(out.states[static_cast<std::size_t>(src)]);
    for (const GuardedStep& step : steps) {
      int dst = intern(step.next);
      auto key = std::make_pair(src, dst);
      auto it = merged_edges.find(key);
      if (it == merged_edges.end()) {
        merged_edges.emplace(key, step.guard);
      } else {
        it->second = guard_or(it->second, step.guard);
      }
    }
  }

  for (const auto& [key, guard] : merged_edges) {
    out.edges.push_back({key.first, guard, key.second});
  }

  for (int s = 0; s < static_cast<int>(out.states.size()); ++s) {
    GFForm label;
    if (gf_state_label(out.states[static_cast<std::size_t>(s)], label)) {
      out.labels.emplace(s, std::move(label));
    }
  }
  return out;
}

BuchiAutomaton concise_to_automaton(const ConciseAutomaton& c) {
  std::vector<std::string> names;
  names.reserve(c.states.size());
  for (const FormulaSet& s : c.states) names.push_back(s.str());
  std::vector<BuchiAutomaton::Edge> edges;
  for (const auto& e : c.edges) edges.push_back({e.src, e.guard, e.dst});
  std::vector<int> accepting;
  std::vector<GFAnnotation> annotations;
  for (const auto& [s, form] : c.labels) {
    accepting.push_back(s);
    annotations.push_back({{s}, form});
  }
  return BuchiAutomaton(c.alphabet, std::move(names), c.initial,
                        std::move(edges), std::move(accepting),
                        std::move(annotations));
}

BuchiAutomaton translate(const Formula& f, ExpansionStrategy strategy) {
  ConciseAutomaton concise = build_concise(f);

  std::vector<std::string> names;
  std::vector<BuchiAutomaton::Edge> edges;
  std::vector<int> accepting;
  std::vector<GFAnnotation> annotations;
  // Per concise state: its state id, or the entry of its component.
  std::vector<int> target(concise.states.size(), -1);

  for (std::size_t s = 0; s < concise.states.size(); ++s) {
    auto label = concise.labels.find(static_cast<int>(s));
    if (label == concise.labels.end()) {
      target[s] = static_cast<int>(names.size());
      names.push_back(concise.states[s].str());
      continue;
    }
    ComponentPlan plan = plan_component(label->second, strategy,
                                        concise.states[s].str() + ":");
    const int base = static_cast<int>(names.size());
    target[s] = base + plan.entry;
    GFAnnotation ann;
    ann.form = label->second;
    for (std::size_t i = 0; i < plan.names.size(); ++i) {
      ann.states.push_back(base + static_cast<int>(i));
      names.push_back(plan.names[i]);
    }
    for (const auto& e : plan.edges) {
      edges.push_back({base + e.src, e.guard, base + e.dst});
    }
    accepting.push_back(base + plan.accepting);
    annotations.push_back(std::move(ann));
  }

  for (const auto& e : concise.edges) {
    if (concise.labels.count(e.src)) {
      // Labelled states only loop onto themselves; the component replaces
      // that structure wholesale.
      if (e.src != e.dst) {
        throw std::logic_error("translate: labelled state with an exit edge");
      }
      continue;
    }
    edges.push_back({target[static_cast<std::size_t>(e.src)], e.guard,
                     target[static_cast<std::size_t>(e.dst)]});
  }

  return BuchiAutomaton(concise.alphabet, std::move(names),
                        target[static_cast<std::size_t>(concise.initial)],
                        std::move(edges), std::move(accepting),
                        std::move(annotations));
}

}  // namespace alba
