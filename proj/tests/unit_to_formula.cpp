#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alba/automaton_io.hpp"
#include "alba/equivalence.hpp"
#include "alba/fragment.hpp"
#include "alba/parser.hpp"
#include "alba/to_formula.hpp"
#include "alba/translate.hpp"
#include "support/test_util.hpp"

using namespace alba;

TEST_CASE("terminal states denote their annotation") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a"], "states": ["s"], "initial": "s",
    "transitions": [{"src": "s", "guard": "tt", "dst": "s"}],
    "accepting": ["s"],
    "gf_annotations": [{"states": ["s"], "alpha0": "tt", "alphas": ["a"]}]
  })");
  CHECK(state_formula(a, 0) == parse_formula("G tt & G F a"));
}

TEST_CASE("single annotated loop state gives G a") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a"], "states": ["s"], "initial": "s",
    "transitions": [{"src": "s", "guard": "a", "dst": "s"}],
    "accepting": ["s"],
    "gf_annotations": [{"states": ["s"], "alpha0": "a", "alphas": []}]
  })");
  CHECK(automaton_to_formula(a) == parse_formula("G a"));
}

TEST_CASE("transient state: until over loop and exit guards") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a", "b", "c"],
    "states": ["q", "t"],
    "initial": "q",
    "transitions": [
      {"src": "q", "guard": "a", "dst": "q"},
      {"src": "q", "guard": "b", "dst": "t"},
      {"src": "t", "guard": "c", "dst": "t"}
    ],
    "accepting": ["t"],
    "gf_annotations": [{"states": ["t"], "alpha0": "c", "alphas": []}]
  })");
  CHECK(state_formula(a, 0) == parse_formula("a U (b & X G c)"));

  // Accepting variant adds the always-stay disjunct.
  BuchiAutomaton acc(a.alphabet(), a.state_names(), a.initial(), a.edges(),
                     {0, 1}, a.annotations());
  CHECK(state_formula(acc, 0) ==
        parse_formula("(a U (b & X G c)) | G a"));
}

TEST_CASE("empty loop disjunction simplifies the until away") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a", "b"],
    "states": ["q", "t"],
    "initial": "q",
    "transitions": [
      {"src": "q", "guard": "b", "dst": "t"},
      {"src": "t", "guard": "a", "dst": "t"}
    ],
    "accepting": ["t"],
    "gf_annotations": [{"states": ["t"], "alpha0": "a", "alphas": []}]
  })");
  // No loops on q: ff U psi == psi.
  CHECK(automaton_to_formula(a) == parse_formula("b & X G a"));
}

TEST_CASE("dead-end transient state denotes ff") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a"], "states": ["q"], "initial": "q",
    "transitions": [], "accepting": []
  })");
  CHECK(automaton_to_formula(a) == make_false());
}

TEST_CASE("missing annotation and broken structure are rejected") {
  // An unannotated multi-state terminal cycle cannot be unfolded.
  BuchiAutomaton no_ann = from_json(R"({
    "ap": ["a"], "states": ["p", "q"], "initial": "p",
    "transitions": [{"src": "p", "guard": "a", "dst": "q"},
                    {"src": "q", "guard": "a", "dst": "p"}],
    "accepting": ["q"]
  })");
  CHECK_THROWS_AS(automaton_to_formula(no_ann), std::invalid_argument);

  // A singleton loop needs no annotation: the until formula covers it.
  BuchiAutomaton loop_only = from_json(R"({
    "ap": ["a"], "states": ["s"], "initial": "s",
    "transitions": [{"src": "s", "guard": "a", "dst": "s"}],
    "accepting": ["s"]
  })");
  Formula f = automaton_to_formula(loop_only);
  LassoFamily fam{Alphabet({"a"}), 2, 2};
  CHECK(bounded_equiv(f, parse_formula("G a"), fam).equivalent);

  BuchiAutomaton two_cycle = from_json(R"({
    "ap": ["a"], "states": ["p", "q", "t"], "initial": "p",
    "transitions": [
      {"src": "p", "guard": "tt", "dst": "q"},
      {"src": "q", "guard": "tt", "dst": "p"},
      {"src": "p", "guard": "a", "dst": "t"},
      {"src": "t", "guard": "tt", "dst": "t"}
    ],
    "accepting": ["t"],
    "gf_annotations": [{"states": ["t"], "alpha0": "tt", "alphas": []}]
  })");
  CHECK_THROWS_AS(automaton_to_formula(two_cycle), std::invalid_argument);
}

TEST_CASE("unreachable junk is trimmed before translation") {
  BuchiAutomaton a = from_json(R"({
    "ap": ["a"],
    "states": ["s", "junk1", "junk2"],
    "initial": "s",
    "transitions": [
      {"src": "s", "guard": "a", "dst": "s"},
      {"src": "junk1", "guard": "tt", "dst": "junk2"},
      {"src": "junk2", "guard": "tt", "dst": "junk1"}
    ],
    "accepting": ["s"],
    "gf_annotations": [{"states": ["s"], "alpha0": "a", "alphas": []}]
  })");
  // The unreachable two-state cycle would violate the structural check.
  CHECK(automaton_to_formula(a) == parse_formula("G a"));
}

TEST_CASE("shared successors are translated once and reused") {
  // Diamond: q branches to l and r, both step into the same terminal.
  BuchiAutomaton a = from_json(R"({
    "ap": ["a", "b", "c"],
    "states": ["q", "l", "r", "t"],
    "initial": "q",
    "transitions": [
      {"src": "q", "guard": "a", "dst": "l"},
      {"src": "q", "guard": "b", "dst": "r"},
      {"src": "l", "guard": "a", "dst": "t"},
      {"src": "r", "guard": "b", "dst": "t"},
      {"src": "t", "guard": "c", "dst": "t"}
    ],
    "accepting": ["t"],
    "gf_annotations": [{"states": ["t"], "alpha0": "c", "alphas": []}]
  })");
  Formula f = automaton_to_formula(a);
  CHECK(classify_fragment(f).lio);
  LassoFamily fam{a.alphabet(), 2, 2};
  CHECK(bounded_equiv(f, a, fam).equivalent);
}

TEST_CASE("roundtrip: translate then read back") {
  LassoFamily fam{Alphabet({"a", "b"}), 3, 3};

  Formula gfa = parse_formula("G F a");
  Formula back = automaton_to_formula(translate(gfa));
  CHECK(bounded_equiv(gfa, back, fam).equivalent);

  Formula aub = parse_formula("a U b");
  Formula back2 = automaton_to_formula(translate(aub));
  CHECK(back2 == parse_formula("a U (b & X G tt)"));
  CHECK(bounded_equiv(aub, back2, fam).equivalent);
}

TEST_CASE("roundtrip: random formulas across strategies") {
  LassoFamily fam{Alphabet({"a", "b"}), 3, 3};
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Formula f = random_lio(seed, 10, {"a", "b"});
    auto strategy = static_cast<ExpansionStrategy>(seed % 3);
    Formula back = automaton_to_formula(translate(f, strategy));
    CHECK(classify_fragment(back).lio);
    CHECK_MESSAGE(bounded_equiv(f, back, fam).equivalent, "phi=", f.str(),
                  " back=", back.str());
  }
}
