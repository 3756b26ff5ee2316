// Shared test helpers: an independent reference evaluator for formulas on
// lasso words, random formula/automaton generators, and small checkers.

#ifndef ALBA_TESTS_TEST_UTIL_HPP
#define ALBA_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alba/automaton.hpp"
#include "alba/formula.hpp"
#include "alba/semantics.hpp"

namespace alba::test {

// Reference evaluator, written against the quantifier semantics directly:
// F/G/U scan forward over positions, and a scan of prefix+period many
// steps from any position visits every position reachable on the lasso.
// Independent of the sweep-fixpoint evaluator in the library.
class UnrolledEval {
public:
  explicit UnrolledEval(const LassoWord& w) : w_(w) {}

  bool eval(const Formula& f, std::size_t pos = 0) {
    pos = canon(pos);
    const auto key = std::make_pair(id_of(f), pos);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool value = compute(f, pos);
    memo_.emplace(key, value);
    return value;
  }

private:
  std::size_t canon(std::size_t i) const {
    const std::size_t p = w_.prefix_len(), q = w_.period_len();
    return i < p ? i : p + (i - p) % q;
  }

  bool compute(const Formula& f, std::size_t i) {
    const std::size_t scan = w_.prefix_len() + w_.period_len();
    switch (f.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: {
        auto idx = w_.alphabet.index_of(f.atom_name());
        return idx && ((w_.at(i) >> *idx) & 1u);
      }
      case Kind::Not: return !eval(f.child(0), i);
      case Kind::And: return eval(f.child(0), i) && eval(f.child(1), i);
      case Kind::Or: return eval(f.child(0), i) || eval(f.child(1), i);
      case Kind::Next: return eval(f.child(0), i + 1);
      case Kind::Eventually:
        for (std::size_t k = i; k <= i + scan; ++k) {
          if (eval(f.child(0), k)) return true;
        }
        return false;
      case Kind::Always:
        for (std::size_t k = i; k <= i + scan; ++k) {
          if (!eval(f.child(0), k)) return false;
        }
        return true;
      case Kind::Until:
        for (std::size_t k = i; k <= i + scan; ++k) {
          if (eval(f.child(1), k)) {
            bool all = true;
            for (std::size_t j = i; j < k; ++j) {
              if (!eval(f.child(0), j)) {
                all = false;
                break;
              }
            }
            if (all) return true;
          }
        }
        return false;
    }
    return false;
  }

  int id_of(const Formula& f) {
    auto it = ids_.find(f);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(ids_.size());
    ids_.emplace(f, id);
    return id;
  }

  const LassoWord& w_;
  std::map<Formula, int> ids_;
  std::map<std::pair<int, std::size_t>, bool> memo_;
};

inline bool unrolled_eval(const Formula& f, const LassoWord& w) {
  return UnrolledEval(w).eval(f);
}

// Arbitrary LTL formula (negations anywhere), at most max_size nodes.
class RandomFormula {
public:
  RandomFormula(std::uint64_t seed, std::vector<std::string> atoms)
      : rng_(seed), atoms_(std::move(atoms)) {}

  Formula gen(std::size_t budget) {
    if (budget <= 1) return leaf();
    if (budget == 2 || pick(3) == 0) {
      switch (pick(5)) {
        case 0: return make_not(gen(budget - 1));
        case 1: return make_next(gen(budget - 1));
        case 2: return make_eventually(gen(budget - 1));
        case 3: return make_always(gen(budget - 1));
        default: return make_not(gen(budget - 1));
      }
    }
    std::size_t left = 1 + pick(budget - 2);
    Formula a = gen(left);
    Formula b = gen(budget - 1 - left);
    switch (pick(3)) {
      case 0: return make_and(a, b);
      case 1: return make_or(a, b);
      default: return make_until(a, b);
    }
  }

private:
  Formula leaf() {
    switch (pick(6)) {
      case 0: return make_true();
      case 1: return make_false();
      default:
        return atoms_.empty() ? make_true() : make_atom(atoms_[pick(atoms_.size())]);
    }
  }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
};

inline Formula random_formula(std::uint64_t seed, std::size_t max_size,
                              const std::vector<std::string>& atoms) {
  RandomFormula gen(seed, atoms);
  return gen.gen(max_size);
}

// Random automaton over the given atoms with guards drawn from a fixed
// pool.  linear_only restricts edges to self-loops plus forward edges, so
// every cycle is a loop by construction.
inline BuchiAutomaton random_automaton(std::uint64_t seed, int states,
                                       const std::vector<std::string>& atoms,
                                       bool linear_only = false) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<Formula> pool{make_true()};
  for (const std::string& a : atoms) {
    pool.push_back(make_atom(a));
    pool.push_back(make_not(make_atom(a)));
  }
  if (atoms.size() >= 2) {
    pool.push_back(make_and(make_atom(atoms[0]), make_atom(atoms[1])));
    pool.push_back(make_or(make_atom(atoms[0]),
                           make_not(make_atom(atoms[1]))));
  }

  std::vector<std::string> names;
  for (int s = 0; s < states; ++s) names.push_back("q" + std::to_string(s));

  std::vector<BuchiAutomaton::Edge> edges;
  for (int s = 0; s < states; ++s) {
    const int out_degree = 1 + static_cast<int>(pick(3));
    for (int k = 0; k < out_degree; ++k) {
      int dst;
      if (linear_only) {
        // self-loop or strictly forward
        dst = (pick(2) == 0 || s + 1 >= states)
                  ? s
                  : s + 1 + static_cast<int>(pick(states - s - 1));
      } else {
        dst = static_cast<int>(pick(states));
      }
      edges.push_back({s, pool[pick(pool.size())], dst});
    }
  }
  std::vector<int> accepting;
  for (int s = 0; s < states; ++s) {
    if (pick(3) == 0) accepting.push_back(s);
  }
  if (accepting.empty()) accepting.push_back(static_cast<int>(pick(states)));
  return BuchiAutomaton(Alphabet(atoms), std::move(names), 0, std::move(edges),
                        std::move(accepting));
}

// Light syntactic sanity check for emitted DOT text.
inline bool dot_well_formed(const std::string& dot) {
  if (dot.rfind("digraph", 0) != 0) return false;
  long depth = 0;
  long quotes = 0;
  for (char c : dot) {
    if (c == '"') ++quotes;
    if (c == '{') ++depth;
    if (c == '}') {
      --depth;
      if (depth < 0) return false;
    }
  }
  return depth == 0 && quotes % 2 == 0;
}

}  // namespace alba::test

#endif  // ALBA_TESTS_TEST_UTIL_HPP
