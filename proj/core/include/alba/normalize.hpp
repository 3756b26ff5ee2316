// Positive (normal) form: negation pushed inward until it applies only to
// atoms.  Uses the dualities of F/G and the de Morgan laws, plus
// !X p = X !p and !(p U q) = (!q U (!p & !q)) | G !q so that arbitrary
// negated inputs normalize.

#ifndef ALBA_NORMALIZE_HPP
#define ALBA_NORMALIZE_HPP

#include "alba/formula.hpp"

namespace alba {

Formula to_positive_form(const Formula& f);

// No modal operator in scope of any negation.
bool is_positive_form(const Formula& f);

}  // namespace alba

#endif  // ALBA_NORMALIZE_HPP
