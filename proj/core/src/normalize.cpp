#include "alba/normalize.hpp"

namespace alba {

namespace {

bool modality_free_rec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
    case Kind::Until:
      return false;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!modality_free_rec(f.child(i))) return false;
      }
      return true;
  }
}

Formula pnf(const Formula& f);

// Positive form of !f.
Formula neg(const Formula& f) {
  switch (f.kind()) {
    case Kind::True: return make_false();
    case Kind::False: return make_true();
    case Kind::Atom: return make_not(f);
    case Kind::Not: return pnf(f.child(0));
    case Kind::And: return make_or(neg(f.child(0)), neg(f.child(1)));
    case Kind::Or: return make_and(neg(f.child(0)), neg(f.child(1)));
    case Kind::Eventually: return make_always(neg(f.child(0)));
    case Kind::Always: return make_eventually(neg(f.child(0)));
    case Kind::Next: return make_next(neg(f.child(0)));
    case Kind::Until: {
      // !(p U q) = (!q U (!p & !q)) | G !q
      Formula nq = neg(f.child(1));
      Formula np = neg(f.child(0));
      return make_or(make_until(nq, make_and(np, nq)), make_always(nq));
    }
  }
  return f;  // unreachable
}

Formula pnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return f;
    case Kind::Not:
      return neg(f.child(0));
    default: {
      std::vector<Formula> kids;
      kids.reserve(f.arity());
      bool changed = false;
      for (std::size_t i = 0; i < f.arity(); ++i) {
        kids.push_back(pnf(f.child(i)));
        if (kids.back() != f.child(i)) changed = true;
      }
      if (!changed) return f;
      switch (f.kind()) {
        case Kind::And: return make_and(kids[0], kids[1]);
        case Kind::Or: return make_or(kids[0], kids[1]);
        case Kind::Next: return make_next(kids[0]);
        case Kind::Eventually: return make_eventually(kids[0]);
        case Kind::Always: return make_always(kids[0]);
        case Kind::Until: return make_until(kids[0], kids[1]);
        default: return f;
      }
    }
  }
}

}  // namespace

Formula to_positive_form(const Formula& f) { return pnf(f); }

bool is_positive_form(const Formula& f) {
  if (f.kind() == Kind::Not) return modality_free_rec(f.child(0));
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_positive_form(f.child(i))) return false;
  }
  return true;
}

}  // namespace alba
