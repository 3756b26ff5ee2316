#include "alba/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace alba {

namespace {

// Printer precedence, loosest first.  Unary operators bind tightest.
int precedence(Kind k) {
  switch (k) {
    case Kind::Or: return 0;
    case Kind::And: return 1;
    case Kind::Until: return 2;
    case Kind::Not:
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always: return 3;
    default: return 4;  // atoms and constants
  }
}

void print_rec(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) {
    out += '(';
    print_rec(child, out);
    out += ')';
  } else {
    print_rec(child, out);
  }
}

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::True: out += "tt"; return;
    case Kind::False: out += "ff"; return;
    case Kind::Atom: out += f.atom_name(); return;
    case Kind::Not:
      out += '!';
      print_child(f.child(0), precedence(f.child(0).kind()) < 3, out);
      return;
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
      out += f.kind() == Kind::Next ? 'X'
           : f.kind() == Kind::Eventually ? 'F' : 'G';
      out += ' ';
      print_child(f.child(0), precedence(f.child(0).kind()) < 3, out);
      return;
    case Kind::Until:
      // Right-associative.
      print_child(f.child(0), precedence(f.child(0).kind()) <= 2, out);
      out += " U ";
      print_child(f.child(1), precedence(f.child(1).kind()) < 2, out);
      return;
    case Kind::And:
      // Left-associative.
      print_child(f.child(0), precedence(f.child(0).kind()) < 1, out);
      out += " & ";
      print_child(f.child(1), precedence(f.child(1).kind()) <= 1, out);
      return;
    case Kind::Or:
      print_child(f.child(0), precedence(f.child(0).kind()) < 0, out);
      out += " | ";
      print_child(f.child(1), precedence(f.child(1).kind()) <= 0, out);
      return;
  }
}

void collect_atoms_rec(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Kind::Atom) {
    const std::string& name = f.atom_name();
    if (std::find(out.begin(), out.end(), name) == out.end()) {
      out.push_back(name);
    }
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    collect_atoms_rec(f.child(i), out);
  }
}

}  // namespace

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::True: return "tt";
    case Kind::False: return "ff";
    case Kind::Atom: return "atom";
    case Kind::Not: return "not";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Next: return "next";
    case Kind::Eventually: return "eventually";
    case Kind::Always: return "always";
    case Kind::Until: return "until";
  }
  return "?";
}

Formula::Formula() { *this = make_true(); }

const std::string& Formula::atom_name() const {
  if (kind() != Kind::Atom) {
    throw std::logic_error("atom_name() on non-atom formula");
  }
  return node_->name;
}

const Formula& Formula::child(std::size_t i) const {
  if (i >= node_->kids.size()) {
    throw std::logic_error("formula child index out of range");
  }
  return node_->kids[i];
}

Formula Formula::make(Kind k, std::string name, std::vector<Formula> kids) {
  std::size_t count = 1;
  for (const Formula& kid : kids) count += kid.node_count();
  auto n = std::make_shared<Node>(
      Node{k, std::move(name), std::move(kids), count});
  return Formula(std::move(n));
}

std::string Formula::str() const {
  std::string out;
  out.reserve(node_count() * 3);
  print_rec(*this, out);
  return out;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  if (node_->count != o.node_->count) return false;
  if (node_->kind == Kind::Atom) return node_->name == o.node_->name;
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    if (!(node_->kids[i] == o.node_->kids[i])) return false;
  }
  return true;
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_count() != b.node_count()) {
    return a.node_count() < b.node_count() ? -1 : 1;
  }
  if (a == b) return 0;
  return a.str().compare(b.str());
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  collect_atoms_rec(*this, out);
  return out;
}

Formula make_true() {
  static const Formula f = Formula::make(Kind::True, {}, {});
  return f;
}

Formula make_false() {
  static const Formula f = Formula::make(Kind::False, {}, {});
  return f;
}

Formula make_atom(std::string name) {
  if (!valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  }
  return Formula::make(Kind::Atom, std::move(name), {});
}

Formula make_not(Formula f) {
  if (f.kind() == Kind::True) return make_false();
  if (f.kind() == Kind::False) return make_true();
  return Formula::make(Kind::Not, {}, {std::move(f)});
}

Formula make_and(Formula lhs, Formula rhs) {
  return Formula::make(Kind::And, {}, {std::move(lhs), std::move(rhs)});
}

Formula make_or(Formula lhs, Formula rhs) {
  return Formula::make(Kind::Or, {}, {std::move(lhs), std::move(rhs)});
}

Formula make_next(Formula f) {
  return Formula::make(Kind::Next, {}, {std::move(f)});
}

Formula make_eventually(Formula f) {
  return Formula::make(Kind::Eventually, {}, {std::move(f)});
}

Formula make_always(Formula f) {
  return Formula::make(Kind::Always, {}, {std::move(f)});
}

Formula make_until(Formula lhs, Formula rhs) {
  return Formula::make(Kind::Until, {}, {std::move(lhs), std::move(rhs)});
}

Formula fold_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return make_true();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = make_and(acc, fs[i]);
  return acc;
}

Formula fold_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return make_false();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = make_or(acc, fs[i]);
  return acc;
}

Formula guard_and(const Formula& a, const Formula& b) {
  if (a.kind() == Kind::True) return b;
  if (b.kind() == Kind::True) return a;
  if (a.kind() == Kind::False || b.kind() == Kind::False) return make_false();
  return make_and(a, b);
}

Formula guard_or(const Formula& a, const Formula& b) {
  if (a.kind() == Kind::False) return b;
  if (b.kind() == Kind::False) return a;
  if (a.kind() == Kind::True || b.kind() == Kind::True) return make_true();
  return make_or(a, b);
}

Formula guard_and_all(const std::vector<Formula>& fs) {
  Formula acc = make_true();
  for (const Formula& f : fs) acc = guard_and(acc, f);
  return acc;
}

std::vector<Formula> flatten_and(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (cur.kind() == Kind::And) {
      stack.push_back(cur.child(1));
      stack.push_back(cur.child(0));
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

std::vector<Formula> flatten_or(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (cur.kind() == Kind::Or) {
      stack.push_back(cur.child(1));
      stack.push_back(cur.child(0));
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (name == "tt" || name == "ff") return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void FormulaSet::insert(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const Formula& a, const Formula& b) {
                               return Formula::compare(a, b) < 0;
                             });
  if (it != items_.end() && *it == f) return;
  items_.insert(it, f);
}

void FormulaSet::insert_conjuncts(const Formula& f) {
  for (const Formula& g : flatten_and(f)) insert(g);
}

FormulaSet FormulaSet::of_conjuncts(const Formula& f) {
  FormulaSet s;
  s.insert_conjuncts(f);
  return s;
}

bool FormulaSet::contains(const Formula& f) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), f,
                             [](const Formula& a, const Formula& b) {
                               return Formula::compare(a, b) < 0;
                             });
  return it != items_.end() && *it == f;
}

Formula FormulaSet::conjunction() const { return fold_and(items_); }

std::string FormulaSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += items_[i].str();
  }
  out += '}';
  return out;
}

bool FormulaSet::operator<(const FormulaSet& o) const {
  return std::lexicographical_compare(
      items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
      [](const Formula& a, const Formula& b) {
        return Formula::compare(a, b) < 0;
      });
}

}  // namespace alba
