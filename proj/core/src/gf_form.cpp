#include "alba/gf_form.hpp"

#include <stdexcept>

#include "alba/fragment.hpp"

namespace alba {

GFForm::GFForm(Formula a0, std::vector<Formula> as)
    : alpha0(std::move(a0)), alphas(std::move(as)) {
  if (!modality_free(alpha0)) {
    throw std::invalid_argument("GF form: alpha0 contains a modality: " +
                                alpha0.str());
  }
  for (const Formula& a : alphas) {
    if (!modality_free(a)) {
      throw std::invalid_argument("GF form: recurrence part contains a "
                                  "modality: " + a.str());
    }
  }
}

Formula gf_form_to_formula(const GFForm& rho) {
  Formula out = make_always(rho.alpha0);
  for (const Formula& a : rho.alphas) {
    out = make_and(out, make_always(make_eventually(a)));
  }
  return out;
}

}  // namespace alba
