// Immutable LTL formula AST with structural equality, a canonical total
// order, and canonical formula sets.
//
// Nodes are shared (shared_ptr to const), so copies are cheap and every
// operation over formulas is a pure function.  The canonical order is
// (node count, printed text); it is total on all formulas and is what every
// formula set in this library iterates in.

#ifndef ALBA_FORMULA_HPP
#define ALBA_FORMULA_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace alba {

enum class Kind : unsigned char {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Next,      // X
  Eventually,// F
  Always,    // G
  Until      // U
};

const char* kind_name(Kind k) noexcept;

class Formula {
public:
  // Default-constructed formula is tt.
  Formula();

  Kind kind() const noexcept { return node_->kind; }
  const std::string& atom_name() const;        // Atom only
  const Formula& child(std::size_t i) const;   // 0 for unary, 0/1 for binary
  std::size_t arity() const noexcept { return node_->kids.size(); }

  std::size_t node_count() const noexcept { return node_->count; }

  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_constant() const noexcept {
    return kind() == Kind::True || kind() == Kind::False;
  }
  bool is_binary() const noexcept { return arity() == 2; }

  // Minimal-parenthesis concrete syntax; parse(str()) rebuilds this AST.
  std::string str() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

  // Canonical total order: node count first, printed text as tiebreak.
  // Returns <0, 0, >0.
  static int compare(const Formula& a, const Formula& b);
  bool operator<(const Formula& o) const { return compare(*this, o) < 0; }

  // Atom names in first-occurrence order, no duplicates.
  std::vector<std::string> atoms() const;

  friend Formula make_true();
  friend Formula make_false();
  friend Formula make_atom(std::string name);
  friend Formula make_not(Formula f);
  friend Formula make_and(Formula lhs, Formula rhs);
  friend Formula make_or(Formula lhs, Formula rhs);
  friend Formula make_next(Formula f);
  friend Formula make_eventually(Formula f);
  friend Formula make_always(Formula f);
  friend Formula make_until(Formula lhs, Formula rhs);

private:
  struct Node {
    Kind kind;
    std::string name;           // Atom only
    std::vector<Formula> kids;
    std::size_t count;          // nodes in this subtree
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

// Smart constructors.  make_not folds !tt -> ff and !ff -> tt (the AST keeps
// negation only as an operator over non-constant operands); everything else
// is built literally.
Formula make_true();
Formula make_false();
Formula make_atom(std::string name);
Formula make_not(Formula f);
Formula make_and(Formula lhs, Formula rhs);
Formula make_or(Formula lhs, Formula rhs);
Formula make_next(Formula f);
Formula make_eventually(Formula f);
Formula make_always(Formula f);
Formula make_until(Formula lhs, Formula rhs);

// Plain folds, no simplification: empty conjunction is tt, empty
// disjunction is ff, single element is itself, otherwise left-associated.
Formula fold_and(const std::vector<Formula>& fs);
Formula fold_or(const std::vector<Formula>& fs);

// Guard combiners with constant folding (tt & g = g, ff & g = ff, ...).
// Used when assembling transition guards, where tt/ff noise would otherwise
// pile up.
Formula guard_and(const Formula& a, const Formula& b);
Formula guard_or(const Formula& a, const Formula& b);
Formula guard_and_all(const std::vector<Formula>& fs);

// In-order leaves of a (possibly nested) conjunction/disjunction.
std::vector<Formula> flatten_and(const Formula& f);
std::vector<Formula> flatten_or(const Formula& f);

// True iff the given atom name matches [a-z][A-Za-z0-9_]* and is not a
// reserved word (tt, ff).
bool valid_atom_name(const std::string& name);

// Set of formulas, kept sorted in canonical order with structural dedup.
class FormulaSet {
public:
  FormulaSet() = default;

  // Inserts the formula as-is.
  void insert(const Formula& f);
  // Inserts the conjuncts of f: And nodes are split recursively, everything
  // else is inserted as one element.  Formula sets stand for conjunctions,
  // so this is the canonical way to form a state from a formula.
  void insert_conjuncts(const Formula& f);

  static FormulaSet of_conjuncts(const Formula& f);

  bool contains(const Formula& f) const;
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }

  const std::vector<Formula>& items() const noexcept { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  // Conjunction of the members in canonical order; tt when empty.
  Formula conjunction() const;

  std::string str() const;  // "{a, F b}"

  bool operator==(const FormulaSet& o) const { return items_ == o.items_; }
  bool operator!=(const FormulaSet& o) const { return !(*this == o); }
  bool operator<(const FormulaSet& o) const;

private:
  std::vector<Formula> items_;
};

}  // namespace alba

#endif  // ALBA_FORMULA_HPP
