// Syntactic fragment membership.
//
//   LTL()           modality free: a constraint on a single letter
//   LTL(F,G)        eventually/always only (restricted temporal logic)
//   LIO             phi ::= psi | phi|phi | phi&phi | X phi | alpha U phi
//                   with psi in LTL(F,G) and alpha in LTL()
//   flat LTL+(U,X)  positive form, modalities U/X only, and the left
//                   operand of every U in LTL()
//
// All checks are on the formula as written; lio_after_pnf answers the
// "expressible after normalization" question separately.

#ifndef ALBA_FRAGMENT_HPP
#define ALBA_FRAGMENT_HPP

#include "alba/formula.hpp"

namespace alba {

struct FragmentClass {
  bool ltl0 = false;      // LTL()
  bool ltl_fg = false;    // LTL(F,G)
  bool lio = false;
  bool flat_ux = false;   // flat LTL+(U,X)
};

// No modal operator anywhere (the LTL() check).
bool modality_free(const Formula& f);

FragmentClass classify_fragment(const Formula& f);

// LIO membership of to_positive_form(f).  The syntactic check above never
// rewrites; this helper is for "can be expressed as LIO" queries over
// arbitrary (typically negated) inputs.
bool lio_after_pnf(const Formula& f);

}  // namespace alba

#endif  // ALBA_FRAGMENT_HPP
