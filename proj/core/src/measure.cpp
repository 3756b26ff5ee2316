#include "alba/measure.hpp"

#include <stdexcept>

#include "alba/fragment.hpp"
#include "alba/normalize.hpp"

namespace alba {

namespace {

Size size_rec(const Formula& f) {
  if (modality_free(f)) return 1;
  switch (f.kind()) {
    case Kind::Or:
    case Kind::And:
      return size_rec(f.child(0)) + 1 + size_rec(f.child(1));
    case Kind::Eventually:
    case Kind::Next:
      return 1 + size_rec(f.child(0));
    case Kind::Always:
      return 2 * size_rec(f.child(0));
    case Kind::Until:
      return 1 + size_rec(f.child(1));
    default:
      throw std::invalid_argument("size_of: formula not in positive LIO: " +
                                  f.str());
  }
}

}  // namespace

Size size_of(const Formula& f) {
  if (!is_positive_form(f) || !classify_fragment(f).lio) {
    throw std::invalid_argument("size_of: formula not in positive LIO: " +
                                f.str());
  }
  return size_rec(f);
}

SetSize SetSize::of(const FormulaSet& s) {
  SetSize out;
  if (s.empty()) return out;  // (0, -)
  std::vector<Size> sizes;
  sizes.reserve(s.size());
  for (const Formula& f : s) {
    sizes.push_back(size_of(f));
    if (sizes.back() > out.max_) out.max_ = sizes.back();
  }
  out.counts_.assign(static_cast<std::size_t>(out.max_), 0);
  for (Size sz : sizes) {
    // counts_[0] is the count at max_, counts_[max_-1] the count at 1.
    ++out.counts_[static_cast<std::size_t>(out.max_ - sz)];
  }
  return out;
}

std::string SetSize::str() const {
  if (max_ == 0) return "(0, -)";
  std::string out = "(" + std::to_string(max_) + ", (";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts_[i]);
  }
  out += "))";
  return out;
}

bool less_than(const SetSize& a, const SetSize& b) {
  if (a.max_size() != b.max_size()) return a.max_size() < b.max_size();
  // Same k: counts vectors have equal length; compare from index k downward,
  // which is left to right in the stored representation.
  return a.counts() < b.counts();
}

SetSize size_of_set(const FormulaSet& s) { return SetSize::of(s); }

}  // namespace alba
