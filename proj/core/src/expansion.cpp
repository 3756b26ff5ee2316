#include "alba/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace alba {

namespace {

std::string subset_name(std::uint32_t mask, int n) {
  std::string out = "w";
  for (int i = 1; i <= n; ++i) {
    if (mask & (std::uint32_t{1} << (i - 1))) out += std::to_string(i);
  }
  return out;
}

ComponentPlan plan_cycle(const GFForm& rho) {
  const int n = static_cast<int>(rho.alphas.size());
  ComponentPlan plan;
  for (int i = 0; i <= n; ++i) plan.names.push_back("w" + std::to_string(i));
  plan.entry = 0;
  plan.accepting = n;
  for (int i = 0; i < n; ++i) {
    plan.edges.push_back(
        {i, guard_and(rho.alpha0, make_not(rho.alphas[i])), i});
    plan.edges.push_back({i, guard_and(rho.alpha0, rho.alphas[i]), i + 1});
  }
  plan.edges.push_back({n, rho.alpha0, 0});
  return plan;
}

// Guard for "the scan starting at obligation from+1 stalls exactly at j":
// alpha0 & a_{from+1} & ... & a_j & !a_{j+1}, the last conjunct absent when
// j = n.  j = from means the first obligation already fails.
Formula scan_guard(const GFForm& rho, int from, int j) {
  const int n = static_cast<int>(rho.alphas.size());
  Formula g = rho.alpha0;
  for (int i = from + 1; i <= j; ++i) g = guard_and(g, rho.alphas[i - 1]);
  if (j < n) g = guard_and(g, make_not(rho.alphas[j]));
  return g;
}

ComponentPlan plan_shortcut(const GFForm& rho) {
  const int n = static_cast<int>(rho.alphas.size());
  ComponentPlan plan;
  for (int i = 0; i <= n; ++i) plan.names.push_back("w" + std::to_string(i));
  plan.entry = 0;
  plan.accepting = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j <= n; ++j) {
      plan.edges.push_back({i, scan_guard(rho, i, j), j});
    }
  }
  // From the accepting state the scan restarts at the first obligation.
  for (int j = 0; j <= n; ++j) {
    plan.edges.push_back({n, scan_guard(rho, 0, j), j});
  }
  return plan;
}

ComponentPlan plan_subset(const GFForm& rho) {
  const int n = static_cast<int>(rho.alphas.size());
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  ComponentPlan plan;
  for (std::uint32_t t = 0; t <= full; ++t) {
    plan.names.push_back(subset_name(t, n));
  }
  plan.entry = 0;
  plan.accepting = static_cast<int>(full);

  // Guard for reaching exactly the subset "next" from "t": newly met
  // obligations must hold, obligations outside "next" must fail, already
  // met ones are unconstrained.  From the accepting state the tracked set
  // resets, so every obligation is constrained.
  auto transition_guard = [&](std::uint32_t t, std::uint32_t next,
                              bool reset) {
    Formula g = rho.alpha0;
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << (i - 1);
      if (next & bit) {
        if (reset || !(t & bit)) g = guard_and(g, rho.alphas[i - 1]);
      } else {
        g = guard_and(g, make_not(rho.alphas[i - 1]));
      }
    }
    return g;
  };

  for (std::uint32_t t = 0; t <= full; ++t) {
    if (t == full) {
      for (std::uint32_t next = 0; next <= full; ++next) {
        plan.edges.push_back({static_cast<int>(t),
                              transition_guard(t, next, true),
                              static_cast<int>(next)});
      }
    } else {
      for (std::uint32_t next = 0; next <= full; ++next) {
        if ((next & t) != t) continue;  // obligations are never forgotten
        plan.edges.push_back({static_cast<int>(t),
                              transition_guard(t, next, false),
                              static_cast<int>(next)});
      }
    }
  }
  return plan;
}

}  // namespace

const char* strategy_name(ExpansionStrategy s) noexcept {
  switch (s) {
    case ExpansionStrategy::Cycle: return "cycle";
    case ExpansionStrategy::Shortcut: return "shortcut";
    case ExpansionStrategy::Subset: return "subset";
  }
  return "?";
}

ComponentPlan plan_component(const GFForm& rho, ExpansionStrategy strategy,
                             const std::string& name_prefix) {
  ComponentPlan plan;
  switch (strategy) {
    case ExpansionStrategy::Cycle: plan = plan_cycle(rho); break;
    case ExpansionStrategy::Shortcut: plan = plan_shortcut(rho); break;
    case ExpansionStrategy::Subset: plan = plan_subset(rho); break;
  }
  if (!name_prefix.empty()) {
    for (std::string& name : plan.names) name = name_prefix + name;
  }
  return plan;
}

BuchiAutomaton expand(const GFForm& rho, ExpansionStrategy strategy,
                      const Alphabet& alphabet) {
  ComponentPlan plan = plan_component(rho, strategy);
  GFAnnotation ann;
  for (int s = 0; s < static_cast<int>(plan.names.size()); ++s) {
    ann.states.push_back(s);
  }
  ann.form = rho;
  return BuchiAutomaton(alphabet, std::move(plan.names), plan.entry,
                        std::move(plan.edges), {plan.accepting},
                        {std::move(ann)});
}

BuchiAutomaton expand(const GFForm& rho, ExpansionStrategy strategy) {
  std::vector<std::string> atoms = rho.alpha0.atoms();
  for (const Formula& a : rho.alphas) {
    for (const std::string& name : a.atoms()) {
      if (std::find(atoms.begin(), atoms.end(), name) == atoms.end()) {
        atoms.push_back(name);
      }
    }
  }
  return expand(rho, strategy, Alphabet(std::move(atoms)));
}

}  // namespace alba
