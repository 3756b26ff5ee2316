#include "alba/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace alba {

Alphabet::Alphabet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!valid_atom_name(atoms_[i])) {
      throw std::invalid_argument("alphabet: invalid atom name '" + atoms_[i] +
                                  "'");
    }
    for (std::size_t j = i + 1; j < atoms_.size(); ++j) {
      if (atoms_[i] == atoms_[j]) {
        throw std::invalid_argument("alphabet: duplicate atom '" + atoms_[i] +
                                    "'");
      }
    }
  }
}

Alphabet Alphabet::of_formula(const Formula& f) { return Alphabet(f.atoms()); }

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

bool Alphabet::contains_all(const std::vector<std::string>& names) const {
  return std::all_of(names.begin(), names.end(),
                     [&](const std::string& n) { return contains(n); });
}

std::uint32_t Alphabet::letter_count() const {
  if (atoms_.size() > 20) {
    throw std::invalid_argument(
        "alphabet too large for letter enumeration (" +
        std::to_string(atoms_.size()) + " atoms)");
  }
  return std::uint32_t{1} << atoms_.size();
}

std::string Alphabet::letter_str(Letter e) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (e & (Letter{1} << i)) {
      if (!first) out += ',';
      out += atoms_[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

LassoWord::LassoWord(Alphabet a, std::vector<Letter> pre,
                     std::vector<Letter> per)
    : alphabet(std::move(a)), prefix(std::move(pre)), period(std::move(per)) {
  if (period.empty()) {
    throw std::invalid_argument("lasso word: empty period");
  }
  const Letter limit = alphabet.letter_count();
  for (Letter e : prefix) {
    if (e >= limit) throw std::invalid_argument("lasso word: letter out of range");
  }
  for (Letter e : period) {
    if (e >= limit) throw std::invalid_argument("lasso word: letter out of range");
  }
}

Letter LassoWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

LassoWord LassoWord::shifted() const {
  if (!prefix.empty()) {
    return LassoWord(alphabet,
                     std::vector<Letter>(prefix.begin() + 1, prefix.end()),
                     period);
  }
  std::vector<Letter> rotated(period.begin() + 1, period.end());
  rotated.push_back(period.front());
  return LassoWord(alphabet, {}, std::move(rotated));
}

std::string LassoWord::str() const {
  std::string out;
  for (Letter e : prefix) out += alphabet.letter_str(e);
  out += " (";
  for (Letter e : period) out += alphabet.letter_str(e);
  out += ")^w";
  return out;
}

bool eval_letter(const Formula& f, Letter e, const Alphabet& alphabet) {
  switch (f.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: {
      auto idx = alphabet.index_of(f.atom_name());
      if (!idx) return false;  // atom never occurs in this alphabet
      return (e >> *idx) & 1u;
    }
    case Kind::Not: return !eval_letter(f.child(0), e, alphabet);
    case Kind::And:
      return eval_letter(f.child(0), e, alphabet) &&
             eval_letter(f.child(1), e, alphabet);
    case Kind::Or:
      return eval_letter(f.child(0), e, alphabet) ||
             eval_letter(f.child(1), e, alphabet);
    default:
      throw std::invalid_argument(
          "eval_letter: formula contains a modal operator: " + f.str());
  }
}

std::vector<bool> truth_table(const Formula& f, const Alphabet& alphabet) {
  const std::uint32_t n = alphabet.letter_count();
  std::vector<bool> table(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    table[e] = eval_letter(f, e, alphabet);
  }
  return table;
}

bool satisfiable(const Formula& f, const Alphabet& alphabet) {
  const std::uint32_t n = alphabet.letter_count();
  for (std::uint32_t e = 0; e < n; ++e) {
    if (eval_letter(f, e, alphabet)) return true;
  }
  return false;
}

bool guards_equal(const Formula& a, const Formula& b,
                  const Alphabet& alphabet) {
  return truth_table(a, alphabet) == truth_table(b, alphabet);
}

namespace {

// Bottom-up evaluator over the lasso graph.  values[i] is the truth of the
// current subformula at position i; succ(N-1) = p.
class LassoEval {
public:
  explicit LassoEval(const LassoWord& w)
      : w_(w),
        p_(w.prefix.size()),
        n_(w.prefix.size() + w.period.size()) {}

  std::vector<bool> table(const Formula& f) {
    switch (f.kind()) {
      case Kind::True: return std::vector<bool>(n_, true);
      case Kind::False: return std::vector<bool>(n_, false);
      case Kind::Atom: {
        auto idx = w_.alphabet.index_of(f.atom_name());
        if (!idx) {
          throw std::invalid_argument("eval_lasso: atom '" + f.atom_name() +
                                      "' not in the word's alphabet");
        }
        std::vector<bool> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = (w_.at(i) >> *idx) & 1u;
        return v;
      }
      case Kind::Not: {
        std::vector<bool> v = table(f.child(0));
        v.flip();
        return v;
      }
      case Kind::And: {
        std::vector<bool> a = table(f.child(0));
        std::vector<bool> b = table(f.child(1));
        for (std::size_t i = 0; i < n_; ++i) a[i] = a[i] && b[i];
        return a;
      }
      case Kind::Or: {
        std::vector<bool> a = table(f.child(0));
        std::vector<bool> b = table(f.child(1));
        for (std::size_t i = 0; i < n_; ++i) a[i] = a[i] || b[i];
        return a;
      }
      case Kind::Next: {
        std::vector<bool> c = table(f.child(0));
        std::vector<bool> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = c[succ(i)];
        return v;
      }
      case Kind::Eventually: {
        // Least fixpoint of v[i] = c[i] || v[succ(i)].
        std::vector<bool> c = table(f.child(0));
        return fixpoint(
            std::vector<bool>(n_, false),
            [&](const std::vector<bool>& v, std::size_t i) {
              return c[i] || v[succ(i)];
            });
      }
      case Kind::Always: {
        // Greatest fixpoint of v[i] = c[i] && v[succ(i)].
        std::vector<bool> c = table(f.child(0));
        return fixpoint(
            std::vector<bool>(n_, true),
            [&](const std::vector<bool>& v, std::size_t i) {
              return c[i] && v[succ(i)];
            });
      }
      case Kind::Until: {
        // Least fixpoint of v[i] = b[i] || (a[i] && v[succ(i)]).
        std::vector<bool> a = table(f.child(0));
        std::vector<bool> b = table(f.child(1));
        return fixpoint(
            std::vector<bool>(n_, false),
            [&](const std::vector<bool>& v, std::size_t i) {
              return b[i] || (a[i] && v[succ(i)]);
            });
      }
    }
    throw std::logic_error("eval_lasso: unhandled formula kind");
  }

private:
  std::size_t succ(std::size_t i) const { return i + 1 == n_ ? p_ : i + 1; }

  template <typename Step>
  std::vector<bool> fixpoint(std::vector<bool> v, Step step) const {
    // Backward sweeps reach the fixpoint after at most n_+1 rounds; each
    // sweep carries information once across the back edge.
    for (std::size_t round = 0; round <= n_ + 1; ++round) {
      bool changed = false;
      for (std::size_t i = n_; i-- > 0;) {
        bool next = step(v, i);
        if (next != v[i]) {
          v[i] = next;
          changed = true;
        }
      }
      if (!changed) return v;
    }
    throw std::logic_error("eval_lasso: fixpoint failed to stabilize");
  }

  const LassoWord& w_;
  std::size_t p_;
  std::size_t n_;
};

}  // namespace

bool eval_lasso(const Formula& f, const LassoWord& w) {
  LassoEval eval(w);
  return eval.table(f)[0];
}

}  // namespace alba
