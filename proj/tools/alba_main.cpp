// Command-line front end: translate, to-formula, classify, expand, equiv,
// corpus.
//
// Exit codes: 0 success (equivalent / in fragment), 1 semantic negative
// (counterexample, outside the fragment, failed --expect), 2 usage, parse,
// or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alba/automaton_io.hpp"
#include "alba/corpus.hpp"
#include "alba/equivalence.hpp"
#include "alba/expansion.hpp"
#include "alba/fragment.hpp"
#include "alba/normalize.hpp"
#include "alba/parser.hpp"
#include "alba/to_formula.hpp"
#include "alba/translate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

// Semantic negatives (counterexamples, fragment misses) exit with 1 rather
// than the generic error code.
struct SemanticNegative {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

alba::Formula read_formula_arg(const std::string& formula,
                               const std::string& file) {
  std::string text = formula;
  if (!file.empty()) {
    text = read_file(file);
    // Strip trailing newline noise from single-formula files.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
      text.pop_back();
    }
  }
  return alba::parse_formula(text);
}

alba::ExpansionStrategy parse_strategy(const std::string& name) {
  if (name == "cycle") return alba::ExpansionStrategy::Cycle;
  if (name == "shortcut") return alba::ExpansionStrategy::Shortcut;
  if (name == "subset") return alba::ExpansionStrategy::Subset;
  throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
}

std::string emit_automaton(const alba::BuchiAutomaton& a,
                           const std::string& format) {
  if (format == "hoa") return alba::to_hoa(a);
  if (format == "dot") return alba::to_dot(a);
  return alba::to_json(a);
}

const char* yn(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string formula;
  std::string file;
  std::string automaton;
  std::string strategy = "shortcut";
  std::string format;  // json | hoa | dot; subcommand default applies
  std::string out;
  std::string expect;
  std::string lhs, rhs;
  std::size_t max_prefix = 3;
  std::size_t max_period = 3;
  std::uint64_t seed = 0;
  bool concise = false;
  bool keep_going = false;
};

int run_translate(const Options& opt) {
  alba::Formula input = read_formula_arg(opt.formula, opt.file);
  alba::Formula positive = alba::to_positive_form(input);
  if (!alba::classify_fragment(positive).lio) {
    throw SemanticNegative{"translate: formula is not in LIO after "
                           "normalization: " + positive.str()};
  }
  std::string format = opt.format.empty() ? "json" : opt.format;
  alba::ExpansionStrategy strategy = parse_strategy(opt.strategy);
  alba::BuchiAutomaton result =
      opt.concise
          ? alba::concise_to_automaton(alba::build_concise(positive))
          : alba::translate(positive, strategy);
  write_output(opt.out, emit_automaton(result, format));
  return kExitOk;
}

int run_expand(const Options& opt, const std::vector<std::string>& alphas) {
  alba::Formula alpha0 = alba::parse_formula(opt.formula);
  std::vector<alba::Formula> parts;
  for (const std::string& text : alphas) {
    parts.push_back(alba::parse_formula(text));
  }
  alba::GFForm rho(alpha0, parts);
  std::string format = opt.format.empty() ? "json" : opt.format;
  alba::BuchiAutomaton result =
      alba::expand(rho, parse_strategy(opt.strategy));
  write_output(opt.out, emit_automaton(result, format));
  return kExitOk;
}

int run_classify(const Options& opt) {
  std::ostringstream out;
  bool expected_ok = true;

  if (!opt.automaton.empty()) {
    alba::BuchiAutomaton a = alba::from_json(read_file(opt.automaton));
    alba::AutomatonClass c = alba::classify_automaton(a);
    out << "states: " << a.state_count() << "\n";
    out << "terminal: " << yn(c.terminal) << "\n";
    out << "weak: " << yn(c.weak) << "\n";
    if (c.min_k) out << "min k-weak: " << *c.min_k << "\n";
    out << "linear: " << yn(c.linear) << "\n";
    out << "structural almost-linear: " << yn(c.structural_alba) << "\n";
    if (!opt.expect.empty()) {
      if (opt.expect == "terminal") expected_ok = c.terminal;
      else if (opt.expect == "weak") expected_ok = c.weak;
      else if (opt.expect == "linear") expected_ok = c.linear;
      else if (opt.expect == "alba") expected_ok = c.structural_alba;
      else throw CLI::ValidationError("--expect",
                                      "unknown class '" + opt.expect + "'");
    }
  } else {
    alba::Formula f = read_formula_arg(opt.formula, opt.file);
    alba::FragmentClass c = alba::classify_fragment(f);
    alba::Formula positive = alba::to_positive_form(f);
    bool lio_pnf = alba::classify_fragment(positive).lio;
    out << "formula: " << f.str() << "\n";
    out << "ltl(): " << yn(c.ltl0) << "\n";
    out << "ltl(f,g): " << yn(c.ltl_fg) << "\n";
    out << "lio (as written): " << yn(c.lio) << "\n";
    out << "flat ltl+(u,x): " << yn(c.flat_ux) << "\n";
    out << "positive form: " << positive.str() << "\n";
    out << "lio (after positive form): " << yn(lio_pnf) << "\n";
    if (!opt.expect.empty()) {
      if (opt.expect == "ltl0") expected_ok = c.ltl0;
      else if (opt.expect == "ltlfg") expected_ok = c.ltl_fg;
      else if (opt.expect == "lio") expected_ok = c.lio;
      else if (opt.expect == "flat") expected_ok = c.flat_ux;
      else if (opt.expect == "lio-pnf") expected_ok = lio_pnf;
      else throw CLI::ValidationError("--expect",
                                      "unknown fragment '" + opt.expect + "'");
    }
  }

  write_output(opt.out, out.str());
  if (!expected_ok) {
    throw SemanticNegative{"classify: --expect " + opt.expect +
                           " not satisfied"};
  }
  return kExitOk;
}

int run_to_formula(const Options& opt) {
  alba::BuchiAutomaton a = alba::from_json(read_file(opt.automaton));
  alba::BuchiAutomaton trimmed = alba::trim_reachable(a);
  if (!alba::classify_automaton(trimmed).structural_alba) {
    throw SemanticNegative{"to-formula: automaton is not structurally "
                           "almost linear"};
  }
  alba::Formula f = alba::automaton_to_formula(trimmed);
  write_output(opt.out, f.str() + "\n");
  return kExitOk;
}

alba::Side read_side(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) {
    return alba::from_json(read_file(arg));
  }
  return alba::parse_formula(arg);
}

int run_equiv(const Options& opt) {
  alba::Side lhs = read_side(opt.lhs);
  alba::Side rhs = read_side(opt.rhs);

  std::vector<std::string> atoms;
  auto add_atoms = [&](const alba::Side& side) {
    std::vector<std::string> names;
    if (const alba::Formula* f = std::get_if<alba::Formula>(&side)) {
      names = f->atoms();
    } else {
      names = std::get<alba::BuchiAutomaton>(side).alphabet().atoms();
    }
    for (const std::string& n : names) {
      if (std::find(atoms.begin(), atoms.end(), n) == atoms.end()) {
        atoms.push_back(n);
      }
    }
  };
  add_atoms(lhs);
  add_atoms(rhs);

  alba::LassoFamily fam{alba::Alphabet(atoms), opt.max_prefix,
                        opt.max_period};
  alba::EquivReport report = alba::bounded_equiv(lhs, rhs, fam);
  std::ostringstream out;
  out << report.str() << "\n";
  write_output(opt.out, out.str());
  if (!report.equivalent) {
    return kExitNegative;
  }
  return kExitOk;
}

int run_corpus(const Options& opt) {
  alba::CorpusReport report =
      alba::corpus_report(read_file(opt.file), opt.keep_going);
  std::ostringstream out;
  if (opt.format == "json") {
    out << "{\n  \"total\": " << report.total << ",\n";
    out << "  \"lio_after_pnf\": " << report.lio_count << ",\n";
    out << "  \"records\": [\n";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
      const alba::CorpusRecord& r = report.records[i];
      out << "    {\"line\": " << r.line << ", ";
      if (r.error) {
        std::string msg;
        for (char c : *r.error) {
          if (c == '"' || c == '\\') msg += '\\';
          msg += c;
        }
        out << "\"error\": \"" << msg << "\"}";
      } else {
        out << "\"negation_pnf\": \"" << r.negated_pnf << "\", \"lio\": "
            << (r.flags.lio ? "true" : "false") << "}";
      }
      out << (i + 1 < report.records.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
  } else {
    out << "# formulas: " << report.total << "\n";
    for (const alba::CorpusRecord& r : report.records) {
      if (r.error) {
        out << "line " << r.line << ": parse error: " << *r.error << "\n";
        continue;
      }
      out << (r.flags.lio ? "LIO     " : "not-LIO ") << r.original
          << "   ~>  " << r.negated_pnf << "\n";
    }
    if (report.total == 0) {
      out << "# negation syntactic LIO after positive form: n/a\n";
    } else {
      double frac = *report.lio_fraction() * 100.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%zu/%zu (%.1f%%)", report.lio_count,
                    report.total, frac);
      out << "# negation syntactic LIO after positive form: " << buf << "\n";
    }
  }
  write_output(opt.out, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LIO <-> almost linear Buchi automata toolbox"};
  app.require_subcommand(1);

  Options opt;
  std::vector<std::string> alphas;

  app.add_option("--seed", opt.seed,
                 "seed for randomized helpers (reserved)");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "hoa", "dot"}));
    sub->add_option("--out", opt.out, "output path (default stdout)");
  };
  auto add_formula_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("--formula", opt.formula, "formula text");
    auto* p = sub->add_option("--file", opt.file, "file with the formula");
    f->excludes(p);
  };

  CLI::App* translate =
      app.add_subcommand("translate", "translate a LIO formula into an "
                                      "almost linear Buchi automaton");
  add_formula_input(translate);
  translate->add_option("--strategy", opt.strategy,
                        "terminal component expansion: cycle|shortcut|subset")
      ->check(CLI::IsMember({"cycle", "shortcut", "subset"}));
  translate->add_flag("--concise", opt.concise,
                      "emit the labelled concise form instead of expanding");
  add_format(translate);

  CLI::App* expand = app.add_subcommand(
      "expand", "expand G a0 & GF a1 & ... into a terminal component");
  expand->add_option("--alpha0", opt.formula, "invariant part (default tt)")
      ->default_val("tt");
  expand->add_option("--alpha", alphas, "recurrence parts (repeatable)");
  expand->add_option("--strategy", opt.strategy,
                     "cycle|shortcut|subset")
      ->check(CLI::IsMember({"cycle", "shortcut", "subset"}));
  add_format(expand);

  CLI::App* classify = app.add_subcommand(
      "classify", "fragment flags of a formula or class flags of an automaton");
  add_formula_input(classify);
  auto* classify_aut =
      classify->add_option("--automaton", opt.automaton, "automaton JSON file");
  classify_aut->excludes(classify->get_option("--formula"));
  classify_aut->excludes(classify->get_option("--file"));
  classify->add_option(
      "--expect", opt.expect,
      "fail (exit 1) unless the named flag holds: ltl0|ltlfg|lio|flat|"
      "lio-pnf for formulas, terminal|weak|linear|alba for automata");
  classify->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* to_formula = app.add_subcommand(
      "to-formula", "translate an annotated almost linear automaton back "
                    "into a LIO formula");
  to_formula->add_option("--automaton", opt.automaton, "automaton JSON file")
      ->required();
  to_formula->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* equiv = app.add_subcommand(
      "equiv", "bounded lasso-word equivalence of formulas/automata");
  equiv->add_option("--lhs", opt.lhs, "formula text or automaton JSON file")
      ->required();
  equiv->add_option("--rhs", opt.rhs, "formula text or automaton JSON file")
      ->required();
  equiv->add_option("--max-prefix", opt.max_prefix, "max prefix length")
      ->check(CLI::NonNegativeNumber);
  equiv->add_option("--max-period", opt.max_period, "max period length (>=1)")
      ->check(CLI::PositiveNumber);
  equiv->add_option("--out", opt.out, "output path (default stdout)");

  CLI::App* corpus = app.add_subcommand(
      "corpus", "classify the negation of every formula in a file");
  corpus->add_option("--file", opt.file, "one formula per line; # comments")
      ->required();
  corpus->add_flag("--keep-going", opt.keep_going,
                   "report parse failures per line instead of aborting");
  corpus->add_option("--format", opt.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  corpus->add_option("--out", opt.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (app.got_subcommand(translate)) return run_translate(opt);
    if (app.got_subcommand(expand)) return run_expand(opt, alphas);
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(to_formula)) return run_to_formula(opt);
    if (app.got_subcommand(equiv)) return run_equiv(opt);
    if (app.got_subcommand(corpus)) return run_corpus(opt);
  } catch (const SemanticNegative& e) {
    std::cerr << e.message << "\n";
    return kExitNegative;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const alba::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
