#include "alba/fragment.hpp"

#include "alba/normalize.hpp"

namespace alba {

namespace {

bool only_fg_modalities(const Formula& f) {
  switch (f.kind()) {
    case Kind::Next:
    case Kind::Until:
      return false;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!only_fg_modalities(f.child(i))) return false;
      }
      return true;
  }
}

bool only_ux_modalities(const Formula& f) {
  switch (f.kind()) {
    case Kind::Eventually:
    case Kind::Always:
      return false;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!only_ux_modalities(f.child(i))) return false;
      }
      return true;
  }
}

bool flat_until_lefts(const Formula& f) {
  if (f.kind() == Kind::Until && !modality_free(f.child(0))) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!flat_until_lefts(f.child(i))) return false;
  }
  return true;
}

bool is_lio(const Formula& f) {
  if (only_fg_modalities(f)) return true;  // psi case, subsumes LTL()
  switch (f.kind()) {
    case Kind::Or:
    case Kind::And:
      return is_lio(f.child(0)) && is_lio(f.child(1));
    case Kind::Next:
      return is_lio(f.child(0));
    case Kind::Until:
      return modality_free(f.child(0)) && is_lio(f.child(1));
    default:
      return false;
  }
}

}  // namespace

bool modality_free(const Formula& f) {
  switch (f.kind()) {
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
    case Kind::Until:
      return false;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!modality_free(f.child(i))) return false;
      }
      return true;
  }
}

FragmentClass classify_fragment(const Formula& f) {
  FragmentClass c;
  c.ltl0 = modality_free(f);
  c.ltl_fg = only_fg_modalities(f);
  c.lio = is_lio(f);
  c.flat_ux =
      is_positive_form(f) && only_ux_modalities(f) && flat_until_lefts(f);
  return c;
}

bool lio_after_pnf(const Formula& f) {
  return classify_fragment(to_positive_form(f)).lio;
}

}  // namespace alba
