// The size measure on positive LIO formulas and the induced
// lexicographic order on formula-set sizes.
//
//   size(phi) = 1 for modality-free phi, otherwise
//     size(p | q) = size(p & q) = size(p) + 1 + size(q)
//     size(F p)   = 1 + size(p)
//     size(G p)   = 2 * size(p)
//     size(X p)   = 1 + size(p)
//     size(a U p) = 1 + size(p)
//
//   size(S) = (k, (i_k, ..., i_1)) where k is the largest member size and
//   i_j counts members of size j; size({}) = (0,-).  Sizes are ordered by
//   k first, then by the counts read from index k downward.

#ifndef ALBA_MEASURE_HPP
#define ALBA_MEASURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "alba/formula.hpp"

namespace alba {

using Size = std::uint64_t;

// Throws std::invalid_argument unless f is positive LIO.
Size size_of(const Formula& f);

class SetSize {
public:
  static SetSize of(const FormulaSet& s);

  Size max_size() const noexcept { return max_; }
  // counts[0] = i_k, counts[1] = i_{k-1}, ..., counts[k-1] = i_1.
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  bool operator==(const SetSize& o) const {
    return max_ == o.max_ && counts_ == o.counts_;
  }
  bool operator!=(const SetSize& o) const { return !(*this == o); }

  std::string str() const;  // "(3, (1,0,2))" or "(0, -)"

private:
  Size max_ = 0;
  std::vector<std::uint32_t> counts_;
};

// The strict lexicographic order on set sizes.
bool less_than(const SetSize& a, const SetSize& b);

SetSize size_of_set(const FormulaSet& s);

}  // namespace alba

#endif  // ALBA_MEASURE_HPP
