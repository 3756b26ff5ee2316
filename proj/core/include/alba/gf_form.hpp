// The shape G a0 & GF a1 & ... & GF an that describes the language of a
// terminal component.  All parts are modality free.

#ifndef ALBA_GF_FORM_HPP
#define ALBA_GF_FORM_HPP

#include <vector>

#include "alba/formula.hpp"

namespace alba {

struct GFForm {
  Formula alpha0 = make_true();
  std::vector<Formula> alphas;  // order fixed: it drives state naming

  GFForm() = default;
  GFForm(Formula a0, std::vector<Formula> as);  // validates modality freedom

  bool operator==(const GFForm& o) const {
    return alpha0 == o.alpha0 && alphas == o.alphas;
  }
};

// G a0 & GF a1 & ... & GF an, with the GF part omitted when n = 0.
Formula gf_form_to_formula(const GFForm& rho);

}  // namespace alba

#endif  // ALBA_GF_FORM_HPP
