#include "alba/automaton_io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "alba/parser.hpp"

namespace alba {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

// ---------------------------------------------------------------------------
// HOA label expressions: t, f, AP indices, !, &, |, parentheses.  The
// emitter mirrors the formula printer's minimal parentheses so that
// compile/parse are mutually inverse on modality-free formulas.

int bool_prec(Kind k) {
  switch (k) {
    case Kind::Or: return 0;
    case Kind::And: return 1;
    case Kind::Not: return 2;
    default: return 3;
  }
}

void hoa_label_rec(const Formula& f, const Alphabet& ap, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    hoa_label_rec(c, ap, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::True: out += 't'; return;
    case Kind::False: out += 'f'; return;
    case Kind::Atom: {
      auto idx = ap.index_of(f.atom_name());
      if (!idx) fail("hoa: guard atom outside alphabet: " + f.atom_name());
      out += std::to_string(*idx);
      return;
    }
    case Kind::Not:
      out += '!';
      child(f.child(0), bool_prec(f.child(0).kind()) < 2);
      return;
    case Kind::And:
      child(f.child(0), bool_prec(f.child(0).kind()) < 1);
      out += " & ";
      child(f.child(1), bool_prec(f.child(1).kind()) <= 1);
      return;
    case Kind::Or:
      child(f.child(0), bool_prec(f.child(0).kind()) < 0);
      out += " | ";
      child(f.child(1), bool_prec(f.child(1).kind()) <= 0);
      return;
    default:
      fail("hoa: guard contains a modality: " + f.str());
  }
}

class LabelParser {
public:
  LabelParser(const std::string& text, const Alphabet& ap)
      : text_(text), ap_(ap) {}

  Formula parse() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("hoa: trailing input in label expression");
    return f;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (peek() == '|') {
      ++pos_;
      acc = make_or(acc, parse_and());
    }
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (peek() == '&') {
      ++pos_;
      acc = make_and(acc, parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    char c = peek();
    if (c == '!') {
      ++pos_;
      return make_not(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      if (peek() != ')') fail("hoa: expected ')' in label expression");
      ++pos_;
      return f;
    }
    if (c == 't') {
      ++pos_;
      return make_true();
    }
    if (c == 'f') {
      ++pos_;
      return make_false();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::size_t idx = std::stoul(text_.substr(start, pos_ - start));
      if (idx >= ap_.size()) fail("hoa: AP index out of range in label");
      return make_atom(ap_.atoms()[idx]);
    }
    fail("hoa: malformed label expression");
  }

  const std::string& text_;
  const Alphabet& ap_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// ---------------------------------------------------------------------------

Formula parse_guard_text(const std::string& text) {
  Formula f = parse_formula(text);
  return f;
}

}  // namespace

std::string to_json(const BuchiAutomaton& a) {
  ordered_json j;
  j["ap"] = a.alphabet().atoms();
  j["states"] = a.state_names();
  j["initial"] = a.state_name(a.initial());
  ordered_json transitions = ordered_json::array();
  for (const auto& e : a.edges()) {
    transitions.push_back({{"src", a.state_name(e.src)},
                           {"guard", e.guard.str()},
                           {"dst", a.state_name(e.dst)}});
  }
  j["transitions"] = std::move(transitions);
  ordered_json accepting = ordered_json::array();
  for (int s : a.accepting()) accepting.push_back(a.state_name(s));
  j["accepting"] = std::move(accepting);
  if (!a.annotations().empty()) {
    ordered_json anns = ordered_json::array();
    for (const auto& ann : a.annotations()) {
      ordered_json names = ordered_json::array();
      for (int s : ann.states) names.push_back(a.state_name(s));
      ordered_json alphas = ordered_json::array();
      for (const Formula& f : ann.form.alphas) alphas.push_back(f.str());
      anns.push_back({{"states", std::move(names)},
                      {"alpha0", ann.form.alpha0.str()},
                      {"alphas", std::move(alphas)}});
    }
    j["gf_annotations"] = std::move(anns);
  }
  return j.dump(2) + "\n";
}

BuchiAutomaton from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("automaton json: ") + e.what());
  }
  if (!j.is_object()) fail("automaton json: top level must be an object");
  for (const char* key : {"ap", "states", "initial", "transitions",
                          "accepting"}) {
    if (!j.contains(key)) {
      fail(std::string("automaton json: missing field '") + key + "'");
    }
  }

  Alphabet alphabet(j["ap"].get<std::vector<std::string>>());
  std::vector<std::string> names = j["states"].get<std::vector<std::string>>();

  auto index_of = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    fail("automaton json: unknown state '" + name + "'");
  };

  int initial = index_of(j["initial"].get<std::string>());

  std::vector<BuchiAutomaton::Edge> edges;
  for (const auto& t : j["transitions"]) {
    for (const char* key : {"src", "guard", "dst"}) {
      if (!t.contains(key)) {
        fail(std::string("automaton json: transition missing '") + key + "'");
      }
    }
    edges.push_back({index_of(t["src"].get<std::string>()),
                     parse_guard_text(t["guard"].get<std::string>()),
                     index_of(t["dst"].get<std::string>())});
  }

  std::vector<int> accepting;
  for (const auto& s : j["accepting"]) {
    accepting.push_back(index_of(s.get<std::string>()));
  }

  std::vector<GFAnnotation> annotations;
  if (j.contains("gf_annotations")) {
    for (const auto& ann : j["gf_annotations"]) {
      GFAnnotation out;
      for (const auto& s : ann["states"]) {
        out.states.push_back(index_of(s.get<std::string>()));
      }
      std::vector<Formula> alphas;
      for (const auto& t : ann["alphas"]) {
        alphas.push_back(parse_guard_text(t.get<std::string>()));
      }
      out.form =
          GFForm(parse_guard_text(ann["alpha0"].get<std::string>()),
                 std::move(alphas));
      annotations.push_back(std::move(out));
    }
  }

  return BuchiAutomaton(std::move(alphabet), std::move(names), initial,
                        std::move(edges), std::move(accepting),
                        std::move(annotations));
}

std::string to_hoa(const BuchiAutomaton& a) {
  std::ostringstream out;
  out << "HOA: v1\n";
  out << "States: " << a.state_count() << "\n";
  out << "Start: " << a.initial() << "\n";
  out << "AP: " << a.alphabet().size();
  for (const std::string& atom : a.alphabet().atoms()) {
    out << ' ' << quote(atom);
  }
  out << "\n";
  out << "acc-name: Buchi\n";
  out << "Acceptance: 1 Inf(0)\n";
  out << "--BODY--\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out << "State: " << s << ' ' << quote(a.state_name(s));
    if (a.is_accepting(s)) out << " {0}";
    out << "\n";
    for (const auto* e : a.edges_from(s)) {
      std::string label;
      hoa_label_rec(e->guard, a.alphabet(), label);
      out << '[' << label << "] " << e->dst << "\n";
    }
  }
  out << "--END--\n";
  return out.str();
}

namespace {

class HoaReader {
public:
  explicit HoaReader(const std::string& text) : in_(text) {}

  BuchiAutomaton read() {
    expect_line("HOA: v1");
    int states = -1;
    int start = -1;
    std::vector<std::string> ap;
    bool saw_acceptance = false, saw_ap = false;

    std::string line;
    while (next_line(line)) {
      if (line == "--BODY--") break;
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      if (head == "States:") {
        if (!(ls >> states) || states < 0) fail("hoa: malformed States:");
      } else if (head == "Start:") {
        if (!(ls >> start) || start < 0) fail("hoa: malformed Start:");
      } else if (head == "AP:") {
        int count = -1;
        if (!(ls >> count) || count < 0) fail("hoa: malformed AP:");
        std::string rest;
        std::getline(ls, rest);
        ap = parse_quoted_list(rest);
        if (static_cast<int>(ap.size()) != count) {
          fail("hoa: AP count does not match the listed names");
        }
        saw_ap = true;
      } else if (head == "acc-name:") {
        std::string name;
        ls >> name;
        if (name != "Buchi") fail("hoa: unsupported acc-name");
      } else if (head == "Acceptance:") {
        std::string rest;
        std::getline(ls, rest);
        if (normalize_ws(rest) != "1 Inf(0)") {
          fail("hoa: unsupported acceptance condition");
        }
        saw_acceptance = true;
      } else {
        fail("hoa: unknown header line: " + line);
      }
    }
    if (states < 0 || start < 0 || !saw_ap || !saw_acceptance) {
      fail("hoa: missing mandatory header");
    }
    if (start >= states) fail("hoa: Start state out of range");

    Alphabet alphabet(ap);
    std::vector<std::string> names(states);
    std::vector<bool> seen(states, false);
    std::vector<int> accepting;
    std::vector<BuchiAutomaton::Edge> edges;

    int current = -1;
    bool ended = false;
    while (next_line(line)) {
      if (line == "--END--") {
        ended = true;
        break;
      }
      if (line.rfind("State:", 0) == 0) {
        std::istringstream ls(line.substr(6));
        int s = -1;
        if (!(ls >> s) || s < 0 || s >= states) {
          fail("hoa: malformed State: line");
        }
        if (seen[s]) fail("hoa: duplicate State: " + std::to_string(s));
        seen[s] = true;
        current = s;
        std::string rest;
        std::getline(ls, rest);
        rest = normalize_ws(rest);
        if (!rest.empty() && rest[0] == '"') {
          std::size_t pos = 0;
          names[s] = read_quoted(rest, pos);
          rest = normalize_ws(rest.substr(pos));
        } else {
          names[s] = std::to_string(s);
        }
        if (rest == "{0}") {
          accepting.push_back(s);
        } else if (!rest.empty()) {
          fail("hoa: unexpected trailer on State: line");
        }
      } else if (!line.empty() && line[0] == '[') {
        if (current < 0) fail("hoa: edge before any State:");
        std::size_t close = line.find(']');
        if (close == std::string::npos) fail("hoa: unterminated label");
        std::string label = line.substr(1, close - 1);
        std::istringstream ls(line.substr(close + 1));
        int dst = -1;
        if (!(ls >> dst) || dst < 0 || dst >= states) {
          fail("hoa: malformed edge destination");
        }
        std::string trailer;
        if (ls >> trailer) fail("hoa: unexpected trailer on edge line");
        edges.push_back(
            {current, LabelParser(label, alphabet).parse(), dst});
      } else {
        fail("hoa: unexpected body line: " + line);
      }
    }
    if (!ended) fail("hoa: missing --END--");
    for (int s = 0; s < states; ++s) {
      if (!seen[s]) fail("hoa: state " + std::to_string(s) + " not listed");
    }
    return BuchiAutomaton(std::move(alphabet), std::move(names), start,
                          std::move(edges), std::move(accepting));
  }

private:
  bool next_line(std::string& line) {
    while (std::getline(in_, line)) {
      // Trim trailing carriage returns and surrounding blanks.
      while (!line.empty() &&
             std::isspace(static_cast<unsigned char>(line.back()))) {
        line.pop_back();
      }
      std::size_t begin = 0;
      while (begin < line.size() &&
             std::isspace(static_cast<unsigned char>(line[begin]))) {
        ++begin;
      }
      line = line.substr(begin);
      if (!line.empty()) return true;
    }
    return false;
  }

  void expect_line(const std::string& expected) {
    std::string line;
    if (!next_line(line) || line != expected) {
      fail("hoa: expected '" + expected + "'");
    }
  }

  static std::string normalize_ws(const std::string& s) {
    std::string out;
    bool in_ws = true;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!in_ws) out += ' ';
        in_ws = true;
      } else {
        out += c;
        in_ws = false;
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
  }

  static std::string read_quoted(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != '"') fail("hoa: expected quoted string");
    ++pos;
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
      out += s[pos++];
    }
    if (pos >= s.size()) fail("hoa: unterminated quoted string");
    ++pos;
    return out;
  }

  static std::vector<std::string> parse_quoted_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        continue;
      }
      out.push_back(read_quoted(s, pos));
    }
    return out;
  }

  std::istringstream in_;
};

}  // namespace

BuchiAutomaton from_hoa(const std::string& text) {
  return HoaReader(text).read();
}

std::string to_dot(const BuchiAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  __init [shape=point, label=\"\"];\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out << "  " << quote(a.state_name(s)) << " [shape="
        << (a.is_accepting(s) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __init -> " << quote(a.state_name(a.initial())) << ";\n";
  for (const auto& e : a.edges()) {
    out << "  " << quote(a.state_name(e.src)) << " -> "
        << quote(a.state_name(e.dst)) << " [label=" << quote(e.guard.str())
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace alba
