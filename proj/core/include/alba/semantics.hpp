// Letters, alphabets, lasso words, and exact LTL evaluation over them.
//
// A letter is a bitmask over the atoms of an Alphabet (bit i set means
// atom i holds).  A lasso word u v^w is a finite prefix u plus a non-empty
// period v; it is the finite presentation of an ultimately periodic word
// and the test point of every semantic check in this library.

#ifndef ALBA_SEMANTICS_HPP
#define ALBA_SEMANTICS_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

using Letter = std::uint32_t;

class Alphabet {
public:
  Alphabet() = default;
  // Atom names, order fixed; throws on duplicates or invalid names.
  explicit Alphabet(std::vector<std::string> atoms);
  Alphabet(std::initializer_list<std::string> atoms)
      : Alphabet(std::vector<std::string>(atoms)) {}

  static Alphabet of_formula(const Formula& f);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool contains(const std::string& name) const {
    return index_of(name).has_value();
  }
  bool contains_all(const std::vector<std::string>& names) const;

  // Number of letters, 2^size; throws when size > 20 (letter enumeration
  // is meant for desk-scale alphabets).
  std::uint32_t letter_count() const;

  std::string letter_str(Letter e) const;  // "{a,c}"

  bool operator==(const Alphabet& o) const { return atoms_ == o.atoms_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
  std::vector<std::string> atoms_;
};

struct LassoWord {
  Alphabet alphabet;
  std::vector<Letter> prefix;
  std::vector<Letter> period;  // non-empty

  LassoWord(Alphabet a, std::vector<Letter> pre, std::vector<Letter> per);

  std::size_t prefix_len() const noexcept { return prefix.size(); }
  std::size_t period_len() const noexcept { return period.size(); }

  // Letter at absolute position i (wrapping into the period).
  Letter at(std::size_t i) const;

  // The suffix word u(1)u(2)...: drops the first prefix letter, or rotates
  // the period when the prefix is empty.
  LassoWord shifted() const;

  std::string str() const;  // "{a}{} ({b})^w"

  bool operator==(const LassoWord& o) const {
    return alphabet == o.alphabet && prefix == o.prefix && period == o.period;
  }
};

// Boolean evaluation of a modality-free formula on one letter; throws on
// modal operators.  Atoms outside the alphabet do not occur in any letter
// and evaluate to false.
bool eval_letter(const Formula& f, Letter e, const Alphabet& alphabet);

// Truth table of a modality-free formula over all letters of the alphabet,
// indexed by letter value.
std::vector<bool> truth_table(const Formula& f, const Alphabet& alphabet);

bool satisfiable(const Formula& f, const Alphabet& alphabet);

// Truth-table equality over the alphabet.
bool guards_equal(const Formula& a, const Formula& b,
                  const Alphabet& alphabet);

// Decides u v^w |= f exactly.  Each subformula is evaluated at every
// position of the lasso graph (positions 0 .. |u|+|v|-1 with the back edge
// into position |u|); F/G/U values are fixpoints around the loop.  Atoms of
// f must belong to the word's alphabet.
bool eval_lasso(const Formula& f, const LassoWord& w);

}  // namespace alba

#endif  // ALBA_SEMANTICS_HPP
