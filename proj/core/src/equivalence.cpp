#include "alba/equivalence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "alba/fragment.hpp"
#include "alba/normalize.hpp"

namespace alba {

namespace {

// Advances a base-|letters| counter; returns false on wrap-around.
bool next_word(std::vector<Letter>& word, Letter letters) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (++word[i] < letters) return true;
    word[i] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t LassoFamily::size() const {
  const std::uint64_t letters = alphabet.letter_count();
  std::uint64_t total = 0;
  for (std::size_t p = 0; p <= max_prefix; ++p) {
    for (std::size_t q = 1; q <= max_period; ++q) {
      std::uint64_t words = 1;
      for (std::size_t i = 0; i < p + q; ++i) words *= letters;
      total += words;
    }
  }
  return total;
}

void for_each_lasso(const LassoFamily& fam,
                    const std::function<bool(const LassoWord&)>& visit) {
  if (fam.max_period < 1) {
    throw std::invalid_argument("lasso family: max_period must be >= 1");
  }
  const Letter letters = fam.alphabet.letter_count();
  for (std::size_t p = 0; p <= fam.max_prefix; ++p) {
    for (std::size_t q = 1; q <= fam.max_period; ++q) {
      std::vector<Letter> prefix(p, 0);
      do {
        std::vector<Letter> period(q, 0);
        do {
          if (!visit(LassoWord(fam.alphabet, prefix, period))) return;
        } while (next_word(period, letters));
      } while (next_word(prefix, letters));
    }
  }
}

std::vector<LassoWord> enumerate_lassos(const LassoFamily& fam) {
  std::vector<LassoWord> out;
  out.reserve(fam.size());
  for_each_lasso(fam, [&](const LassoWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool side_accepts(const Side& side, const LassoWord& w) {
  if (const Formula* f = std::get_if<Formula>(&side)) {
    return eval_lasso(*f, w);
  }
  return accepts_lasso(std::get<BuchiAutomaton>(side), w);
}

namespace {

void check_side_alphabet(const Side& side, const Alphabet& alphabet,
                         const char* which) {
  std::vector<std::string> atoms;
  if (const Formula* f = std::get_if<Formula>(&side)) {
    atoms = f->atoms();
  } else {
    atoms = std::get<BuchiAutomaton>(side).alphabet().atoms();
  }
  for (const std::string& a : atoms) {
    if (!alphabet.contains(a)) {
      throw std::invalid_argument(std::string("bounded_equiv: ") + which +
                                  " uses atom '" + a +
                                  "' outside the family alphabet");
    }
  }
}

}  // namespace

std::string EquivReport::str() const {
  std::string out;
  if (equivalent) {
    out = "equivalent on family (prefix <= " +
          std::to_string(family.max_prefix) + ", period <= " +
          std::to_string(family.max_period) + ", " +
          std::to_string(checked) + " lasso words)";
  } else {
    out = "counterexample: " + witness->str() + "  lhs=" +
          (witness_lhs ? "true" : "false") + " rhs=" +
          (witness_lhs ? "false" : "true");
  }
  return out;
}

EquivReport bounded_equiv(const Side& lhs, const Side& rhs,
                          const LassoFamily& fam) {
  check_side_alphabet(lhs, fam.alphabet, "lhs");
  check_side_alphabet(rhs, fam.alphabet, "rhs");

  EquivReport report;
  report.family = fam;
  for_each_lasso(fam, [&](const LassoWord& w) {
    bool l = side_accepts(lhs, w);
    bool r = side_accepts(rhs, w);
    ++report.checked;
    if (l != r) {
      report.witness = w;
      report.witness_lhs = l;
      return false;
    }
    return true;
  });
  if (report.witness) {
    // A witness must genuinely distinguish the sides.
    if (side_accepts(lhs, *report.witness) ==
        side_accepts(rhs, *report.witness)) {
      throw std::logic_error("bounded_equiv: unstable witness");
    }
    report.equivalent = false;
  } else {
    report.equivalent = true;
  }
  return report;
}

AlbaCheck alba_check(const BuchiAutomaton& a, const LassoFamily& fam) {
  AlbaCheck out;
  out.family = fam;
  out.structural = classify_automaton(a).structural_alba;
  if (!out.structural) {
    out.details.push_back("structural: a non-terminal component has more "
                          "than one state");
  }

  out.semantic = true;
  const SccDecomposition d = scc_decompose(a);
  for (const SccComponent& comp : d.components) {
    if (!comp.terminal) continue;
    const int base = comp.states.front();
    for (std::size_t i = 1; i < comp.states.size(); ++i) {
      EquivReport r = bounded_equiv(with_initial(a, base),
                                    with_initial(a, comp.states[i]), fam);
      if (!r.equivalent) {
        out.semantic = false;
        out.details.push_back(
            "states '" + a.state_name(base) + "' and '" +
            a.state_name(comp.states[i]) +
            "' of a terminal component differ: " + r.str());
      }
    }
    for (const GFAnnotation& ann : a.annotations()) {
      // Subset match: dead guards can split an annotated component into
      // smaller pieces at the letter level.
      if (!std::includes(ann.states.begin(), ann.states.end(),
                         comp.states.begin(), comp.states.end())) {
        continue;
      }
      EquivReport r = bounded_equiv(gf_form_to_formula(ann.form),
                                    with_initial(a, base), fam);
      if (!r.equivalent) {
        out.semantic = false;
        out.details.push_back("state '" + a.state_name(base) +
                              "' differs from its annotation: " + r.str());
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random positive-LIO generation.  Grammar-directed: LIO productions at the
// top, LTL(F,G) (positive) for the psi leaves, modality-free positive
// formulas for until guards.  Raw engine draws only (no distributions), so
// results are identical across standard library implementations.

namespace {

class Gen {
public:
  Gen(std::uint64_t seed, const std::vector<std::string>& atoms)
      : rng_(seed), atoms_(atoms) {}

  Formula lio(std::size_t budget) {
    if (budget <= 1) return ltl0(1);
    switch (pick(6)) {
      case 0: return ltl_fg(budget);
      case 1: {
        if (budget < 3) return ltl_fg(budget);
        std::size_t left = split(budget - 1);
        return make_or(lio(left), lio(budget - 1 - left));
      }
      case 2: {
        if (budget < 3) return ltl_fg(budget);
        std::size_t left = split(budget - 1);
        return make_and(lio(left), lio(budget - 1 - left));
      }
      case 3: return make_next(lio(budget - 1));
      case 4: {
        if (budget < 3) return ltl_fg(budget);
        std::size_t left = split(budget - 1);
        return make_until(ltl0(left), lio(budget - 1 - left));
      }
      default: return ltl_fg(budget);
    }
  }

  Formula ltl_fg(std::size_t budget) {
    if (budget <= 1) return ltl0(1);
    switch (pick(5)) {
      case 0: return make_eventually(ltl_fg(budget - 1));
      case 1: return make_always(ltl_fg(budget - 1));
      case 2: {
        if (budget < 3) return ltl0(budget);
        std::size_t left = split(budget - 1);
        return make_or(ltl_fg(left), ltl_fg(budget - 1 - left));
      }
      case 3: {
        if (budget < 3) return ltl0(budget);
        std::size_t left = split(budget - 1);
        return make_and(ltl_fg(left), ltl_fg(budget - 1 - left));
      }
      default: return ltl0(budget);
    }
  }

  Formula ltl0(std::size_t budget) {
    if (budget >= 3 && pick(3) == 0) {
      std::size_t left = split(budget - 1);
      return pick(2) ? make_and(ltl0(left), ltl0(budget - 1 - left))
                     : make_or(ltl0(left), ltl0(budget - 1 - left));
    }
    if (budget >= 2 && pick(4) == 0) {
      return make_not(atom());
    }
    switch (pick(8)) {
      case 0: return make_true();
      case 1: return make_false();
      default: return atom();
    }
  }

private:
  Formula atom() {
    if (atoms_.empty()) return make_true();
    return make_atom(atoms_[pick(atoms_.size())]);
  }

  std::size_t pick(std::size_t n) {
    return static_cast<std::size_t>(rng_() % n);
  }

  // Split a budget of n >= 2 into 1..n-1.
  std::size_t split(std::size_t n) {
    if (n <= 2) return 1;
    return 1 + pick(n - 2);
  }

  std::mt19937_64 rng_;
  const std::vector<std::string>& atoms_;
};

}  // namespace

Formula random_lio(std::uint64_t seed, std::size_t max_size,
                   const std::vector<std::string>& atoms) {
  if (max_size < 1) {
    throw std::invalid_argument("random_lio: max_size must be >= 1");
  }
  Gen gen(seed, atoms);
  Formula f = gen.lio(max_size);
  if (!classify_fragment(f).lio || !is_positive_form(f)) {
    throw std::logic_error("random_lio: generator left the fragment");
  }
  return f;
}

}  // namespace alba
