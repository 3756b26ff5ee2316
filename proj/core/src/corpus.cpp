#include "alba/corpus.hpp"

#include <sstream>
#include <stdexcept>

#include "alba/normalize.hpp"
#include "alba/parser.hpp"

namespace alba {

std::optional<double> CorpusReport::lio_fraction() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(lio_count) / static_cast<double>(total);
}

CorpusReport corpus_report(const std::string& text, bool keep_going) {
  CorpusReport report;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);

    CorpusRecord rec;
    rec.line = lineno;
    rec.original = trimmed;
    try {
      Formula phi = parse_formula(trimmed);
      Formula negated = to_positive_form(make_not(phi));
      rec.negated_pnf = negated.str();
      rec.flags = classify_fragment(negated);
      ++report.total;
      if (rec.flags.lio) ++report.lio_count;
    } catch (const std::exception& e) {
      if (!keep_going) {
        throw std::runtime_error("corpus line " + std::to_string(lineno) +
                                 ": " + e.what());
      }
      rec.error = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace alba
