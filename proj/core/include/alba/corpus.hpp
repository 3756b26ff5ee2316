// Corpus classification: for each input formula phi, compute the positive
// form of !phi and check whether it is syntactic LIO.  Model-checking
// pipelines translate negations, so the negation's fragment is what decides
// whether the direct translation applies.

#ifndef ALBA_CORPUS_HPP
#define ALBA_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alba/fragment.hpp"
#include "alba/formula.hpp"

namespace alba {

struct CorpusRecord {
  std::size_t line = 0;        // 1-based line number in the input
  std::string original;        // text as read
  std::string negated_pnf;     // printed positive form of the negation
  FragmentClass flags;         // fragment of the negation after PNF
  std::optional<std::string> error;  // parse failure, when kept going
};

struct CorpusReport {
  std::vector<CorpusRecord> records;  // input order
  std::size_t total = 0;              // parsed formulas
  std::size_t lio_count = 0;          // negation syntactic LIO after PNF

  // lio_count / total; empty when total == 0.
  std::optional<double> lio_fraction() const;
};

// Reads one formula per line; blank lines and lines starting with '#' are
// skipped.  A parse failure aborts with the line number unless keep_going
// is set, in which case the record carries the error and processing
// continues.
CorpusReport corpus_report(const std::string& text, bool keep_going);

}  // namespace alba

#endif  // ALBA_CORPUS_HPP
