#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "alba/equivalence.hpp"
#include "alba/formula.hpp"
#include "alba/fragment.hpp"
#include "alba/measure.hpp"
#include "alba/normalize.hpp"
#include "alba/parser.hpp"
#include "alba/semantics.hpp"
#include "support/test_util.hpp"

using namespace alba;

namespace {

Formula atom(const char* n) { return make_atom(n); }

const Alphabet kAB({"a", "b"});

LassoWord lasso(std::vector<Letter> prefix, std::vector<Letter> period) {
  return LassoWord(kAB, std::move(prefix), std::move(period));
}

Formula random_lio_for_test(std::uint64_t seed) {
  return random_lio(seed, 10, {"a", "b"});
}

}  // namespace

TEST_CASE("parser: precedence and associativity") {
  CHECK(parse_formula("F a & G b") ==
        make_and(make_eventually(atom("a")), make_always(atom("b"))));
  CHECK(parse_formula("a U b U c") ==
        make_until(atom("a"), make_until(atom("b"), atom("c"))));
  CHECK(parse_formula("!F a") == make_not(make_eventually(atom("a"))));
  CHECK(parse_formula("a | b & c") ==
        make_or(atom("a"), make_and(atom("b"), atom("c"))));
  CHECK(parse_formula("a & b U c") ==
        make_and(atom("a"), make_until(atom("b"), atom("c"))));
  CHECK(parse_formula("a & b & c") ==
        make_and(make_and(atom("a"), atom("b")), atom("c")));
  CHECK(parse_formula("G F a") ==
        make_always(make_eventually(atom("a"))));
  CHECK(parse_formula("(a U b) U c") ==
        make_until(make_until(atom("a"), atom("b")), atom("c")));
}

TEST_CASE("parser: implication sugar and constants") {
  CHECK(parse_formula("a -> b") == make_or(make_not(atom("a")), atom("b")));
  CHECK(parse_formula("a -> b -> c") ==
        make_or(make_not(atom("a")),
                make_or(make_not(atom("b")), atom("c"))));
  CHECK(parse_formula("tt").kind() == Kind::True);
  CHECK(parse_formula("ff").kind() == Kind::False);
  CHECK(parse_formula("!tt").kind() == Kind::False);
  CHECK(parse_formula("ttx") == atom("ttx"));  // maximal munch, not "tt"
  CHECK(parse_formula("fooBar_9") == atom("fooBar_9"));
}

TEST_CASE("parser: errors carry positions") {
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("a &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a | b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a @ b"), ParseError);
  CHECK_THROWS_AS(parse_formula("Q a"), ParseError);
  try {
    parse_formula("a & @");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printer: minimal parentheses round-trip") {
  for (const char* text :
       {"a", "!a", "F a & G b", "a U b U c", "(a U b) U c", "a | b & c",
        "(a | b) & c", "G (a | F b)", "X (a U b)", "!(a & b)",
        "a & (b & c)", "tt U (b & X G a)", "F a U b"}) {
    Formula f = parse_formula(text);
    CHECK(parse_formula(f.str()) == f);
  }
}

TEST_CASE("printer/parser: structural identity on random formulas") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Formula f = test::random_formula(seed, 12, {"a", "b", "c"});
    Formula reparsed = parse_formula(f.str());
    REQUIRE(reparsed == f);
  }
}

TEST_CASE("positive form: the defining equivalences") {
  CHECK(to_positive_form(make_not(make_eventually(atom("a")))) ==
        make_always(make_not(atom("a"))));
  CHECK(to_positive_form(make_not(make_always(atom("a")))) ==
        make_eventually(make_not(atom("a"))));
  CHECK(to_positive_form(parse_formula("!(a & F b)")) ==
        parse_formula("!a | G !b"));
  CHECK(to_positive_form(parse_formula("!(a | b)")) ==
        parse_formula("!a & !b"));
  CHECK(to_positive_form(parse_formula("!X a")) == parse_formula("X !a"));
  CHECK(to_positive_form(parse_formula("!(a U b)")) ==
        parse_formula("(!b U (!a & !b)) | G !b"));
  CHECK(to_positive_form(parse_formula("!!a")) == atom("a"));
}

TEST_CASE("positive form: negated until is equivalent on bounded lassos") {
  Formula lhs = parse_formula("!(a U b)");
  Formula rhs = parse_formula("(!b U (!a & !b)) | G !b");
  // Exhaustive over prefix <= 2, period <= 3 on two atoms.
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      std::vector<Letter> prefix(p, 0), period(q, 0);
      bool more = true;
      while (more) {
        LassoWord w = lasso(prefix, period);
        REQUIRE(eval_lasso(lhs, w) == eval_lasso(rhs, w));
        // advance the combined counter
        more = false;
        for (auto* vec : {&period, &prefix}) {
          bool carried = true;
          for (std::size_t i = vec->size(); i-- > 0 && carried;) {
            carried = ++(*vec)[i] == 4;
            if (carried) (*vec)[i] = 0;
          }
          if (!carried) {
            more = true;
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("positive form: equivalent and idempotent on random formulas") {
  // Exhaustive over prefix <= 2, period <= 2 on two atoms, plus a few
  // longer randomized words per formula.
  LassoFamily fam{kAB, 2, 2};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Formula f = test::random_formula(seed, 9, {"a", "b"});
    Formula p = to_positive_form(f);
    CHECK(is_positive_form(p));
    CHECK(to_positive_form(p) == p);
    for_each_lasso(fam, [&](const LassoWord& w) {
      REQUIRE(eval_lasso(f, w) == eval_lasso(p, w));
      return true;
    });
    for (std::uint64_t wseed = 0; wseed < 4; ++wseed) {
      std::mt19937_64 rng(seed * 977 + wseed);
      std::vector<Letter> prefix(3 + rng() % 2), period(3 + rng() % 2);
      for (auto& e : prefix) e = static_cast<Letter>(rng() % 4);
      for (auto& e : period) e = static_cast<Letter>(rng() % 4);
      LassoWord w = lasso(prefix, period);
      REQUIRE(eval_lasso(f, w) == eval_lasso(p, w));
    }
  }
}

TEST_CASE("positive form: LIO stays LIO") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Formula f = random_lio_for_test(seed);
    Formula p = to_positive_form(f);
    CHECK(classify_fragment(p).lio);
  }
  // LIO admits negations inside its eventually/always and letter parts;
  // normalization must keep such formulas in the fragment.
  for (const char* text :
       {"G (!F a | b)", "b U !G a", "a U !F b", "X !(F a & G b)"}) {
    Formula f = parse_formula(text);
    REQUIRE(classify_fragment(f).lio);
    CHECK_FALSE(is_positive_form(f));
    CHECK(classify_fragment(to_positive_form(f)).lio);
  }
}

TEST_CASE("size measure: table values") {
  CHECK(size_of(atom("a")) == 1);
  CHECK(size_of(parse_formula("F a")) == 2);
  CHECK(size_of(parse_formula("G F a")) == 4);
  CHECK(size_of(parse_formula("a U b")) == 2);       // 1 + size(b)
  CHECK(size_of(parse_formula("a | F b")) == 4);     // 1 + 1 + 2
  CHECK(size_of(parse_formula("!(a & b)")) == 1);    // still LTL()
  CHECK(size_of(parse_formula("X F a")) == 3);
  CHECK(size_of(parse_formula("G (a | F b)")) == 8);
  CHECK_THROWS_AS(size_of(parse_formula("!F a")), std::invalid_argument);
  CHECK_THROWS_AS(size_of(parse_formula("F a U b")), std::invalid_argument);
}

TEST_CASE("size measure: strictly monotone per constructor") {
  // F/G bodies must stay in the eventually/always sublanguage for the
  // composite to remain LIO.
  auto random_fg = [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Formula f = rng() % 2 ? atom("a") : parse_formula("a & !b");
    for (int i = 0; i < static_cast<int>(rng() % 4); ++i) {
      switch (rng() % 4) {
        case 0: f = make_eventually(f); break;
        case 1: f = make_always(f); break;
        case 2: f = make_or(f, atom("b")); break;
        default: f = make_and(atom("b"), f); break;
      }
    }
    return f;
  };

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Formula f = random_lio_for_test(seed);
    Formula g = random_lio_for_test(seed + 7919);
    Size sf = size_of(f), sg = size_of(g);
    CHECK(sf >= 1);
    CHECK(size_of(make_next(f)) > sf);
    CHECK(size_of(make_until(atom("a"), f)) > sf);
    // The binary cases are recursive only when the result stays composite.
    if (!modality_free(f) || !modality_free(g)) {
      CHECK(size_of(make_or(f, g)) > sf);
      CHECK(size_of(make_or(f, g)) > sg);
      CHECK(size_of(make_and(f, g)) > sf);
      CHECK(size_of(make_and(f, g)) > sg);
    }

    Formula h = random_fg(seed);
    Size sh = size_of(h);
    CHECK(size_of(make_eventually(h)) > sh);
    CHECK(size_of(make_always(h)) > sh);
  }
}

TEST_CASE("set size and the lexicographic order") {
  FormulaSet empty;
  CHECK(size_of_set(empty).max_size() == 0);
  CHECK(size_of_set(empty).str() == "(0, -)");

  FormulaSet s;
  s.insert(atom("a"));
  s.insert(parse_formula("F a"));
  SetSize sz = size_of_set(s);
  CHECK(sz.max_size() == 2);
  CHECK(sz.counts() == std::vector<std::uint32_t>{1, 1});

  // (2,(1,0)) < (2,(1,1)): same max, first difference at size 1.
  FormulaSet t;
  t.insert(parse_formula("F a"));
  CHECK(less_than(size_of_set(t), sz));
  CHECK_FALSE(less_than(sz, size_of_set(t)));
  CHECK(less_than(size_of_set(empty), sz));
}

TEST_CASE("set size order is a strict total order") {
  std::vector<SetSize> sizes;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    FormulaSet s;
    const std::size_t members = rng() % 4;
    for (std::size_t i = 0; i < members; ++i) {
      s.insert(random_lio_for_test(rng()));
    }
    sizes.push_back(size_of_set(s));
  }
  for (const SetSize& a : sizes) {
    CHECK_FALSE(less_than(a, a));  // irreflexive
    for (const SetSize& b : sizes) {
      // total: exactly one of <, >, ==
      int rels = (less_than(a, b) ? 1 : 0) + (less_than(b, a) ? 1 : 0) +
                 (a == b ? 1 : 0);
      CHECK(rels == 1);
      for (const SetSize& c : sizes) {
        if (less_than(a, b) && less_than(b, c)) CHECK(less_than(a, c));
      }
    }
  }
}

TEST_CASE("fragment classification: named examples") {
  FragmentClass gfa = classify_fragment(parse_formula("G F a"));
  CHECK_FALSE(gfa.ltl0);
  CHECK(gfa.ltl_fg);
  CHECK(gfa.lio);
  CHECK_FALSE(gfa.flat_ux);

  // a U F b is LIO (LTL() left, LTL(F,G) body) but the F keeps it out of
  // the U/X-only flat fragment.
  FragmentClass aufb = classify_fragment(parse_formula("a U F b"));
  CHECK(aufb.lio);
  CHECK_FALSE(aufb.flat_ux);
  CHECK_FALSE(aufb.ltl_fg);

  CHECK_FALSE(classify_fragment(parse_formula("F a U b")).lio);

  FragmentClass aub = classify_fragment(parse_formula("a U b"));
  CHECK(aub.lio);
  CHECK(aub.flat_ux);

  FragmentClass flat = classify_fragment(parse_formula("X (a U (b U !c))"));
  CHECK(flat.flat_ux);
  CHECK(flat.lio);

  CHECK_FALSE(classify_fragment(parse_formula("!(a U b)")).flat_ux);
  CHECK_FALSE(classify_fragment(parse_formula("(a U b) U c")).flat_ux);

  FragmentClass bool_only = classify_fragment(parse_formula("!(a & b) | c"));
  CHECK(bool_only.ltl0);
  CHECK(bool_only.ltl_fg);
  CHECK(bool_only.lio);
  CHECK(bool_only.flat_ux);
}

TEST_CASE("fragment flags respect the hierarchy") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Formula f = seed % 2 == 0 ? test::random_formula(seed, 10, {"a", "b"})
                              : random_lio_for_test(seed);
    FragmentClass c = classify_fragment(f);
    if (c.ltl0) CHECK(c.ltl_fg);
    if (c.ltl_fg) CHECK(c.lio);
    if (c.flat_ux) CHECK(c.lio);
  }
}

TEST_CASE("lio after positive form") {
  CHECK(lio_after_pnf(parse_formula("!(G (a -> F b))")));
  CHECK(lio_after_pnf(parse_formula("!G F a")));
  CHECK_FALSE(lio_after_pnf(parse_formula("!(G (a -> (b U c)))")));
}

TEST_CASE("canonical order and formula sets") {
  CHECK(Formula::compare(atom("a"), parse_formula("F a")) < 0);
  CHECK(Formula::compare(atom("a"), atom("b")) < 0);
  CHECK(Formula::compare(atom("a"), atom("a")) == 0);

  FormulaSet s;
  s.insert(parse_formula("F a"));
  s.insert(atom("b"));
  s.insert(atom("a"));
  s.insert(atom("a"));  // dedup
  CHECK(s.size() == 3);
  CHECK(s.items()[0] == atom("a"));
  CHECK(s.items()[1] == atom("b"));
  CHECK(s.items()[2] == parse_formula("F a"));
  CHECK(s.str() == "{a, b, F a}");

  FormulaSet c = FormulaSet::of_conjuncts(parse_formula("F a & (b & F a)"));
  CHECK(c.size() == 2);
  CHECK(c.contains(atom("b")));
  CHECK(c.contains(parse_formula("F a")));
  CHECK(c.conjunction() == parse_formula("b & F a"));
  CHECK(FormulaSet().conjunction().kind() == Kind::True);
}

TEST_CASE("eval_letter") {
  // letters over {a, b}: bit 0 = a, bit 1 = b
  CHECK(eval_letter(parse_formula("a & !b"), 0b01, kAB));
  CHECK(eval_letter(make_true(), 0b00, kAB));
  CHECK_FALSE(eval_letter(parse_formula("a | b"), 0b00, kAB));
  CHECK_FALSE(eval_letter(atom("c"), 0b11, kAB));  // unknown atom is false
  CHECK_THROWS_AS(eval_letter(parse_formula("F a"), 0, kAB),
                  std::invalid_argument);
}

TEST_CASE("truth tables and guard equality") {
  CHECK(truth_table(atom("a"), kAB) == std::vector<bool>{false, true, false, true});
  CHECK(guards_equal(parse_formula("!(a & b)"), parse_formula("!a | !b"), kAB));
  CHECK_FALSE(guards_equal(atom("a"), atom("b"), kAB));
  CHECK(satisfiable(parse_formula("a & !b"), kAB));
  CHECK_FALSE(satisfiable(parse_formula("a & !a"), kAB));
}

TEST_CASE("eval_lasso: named examples") {
  CHECK(eval_lasso(parse_formula("G a"), lasso({}, {0b01})));
  CHECK_FALSE(eval_lasso(parse_formula("G F a"), lasso({0b01}, {0b00})));
  CHECK(eval_lasso(parse_formula("a U b"), lasso({0b01}, {0b10})));
  CHECK(eval_lasso(parse_formula("X b"), lasso({0b01}, {0b10})));
  CHECK_FALSE(eval_lasso(parse_formula("a U b"), lasso({}, {0b01})));
  CHECK(eval_lasso(parse_formula("F G a"), lasso({0b00, 0b00}, {0b01})));
}

TEST_CASE("eval_lasso agrees with the reference evaluator") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Formula f = test::random_formula(seed, 8, {"a", "b"});
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 6; ++i) {
      std::vector<Letter> prefix(rng() % 3), period(1 + rng() % 3);
      for (auto& e : prefix) e = static_cast<Letter>(rng() % 4);
      for (auto& e : period) e = static_cast<Letter>(rng() % 4);
      LassoWord w = lasso(prefix, period);
      REQUIRE(eval_lasso(f, w) == test::unrolled_eval(f, w));
    }
  }
}

TEST_CASE("alphabet and lasso invariants") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"tt"}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({"A"}), std::invalid_argument);
  CHECK_THROWS_AS(LassoWord(kAB, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LassoWord(kAB, {7}, {0}), std::invalid_argument);

  LassoWord w = lasso({0b01}, {0b10, 0b11});
  CHECK(w.at(0) == 0b01);
  CHECK(w.at(1) == 0b10);
  CHECK(w.at(2) == 0b11);
  CHECK(w.at(3) == 0b10);
  CHECK(w.shifted() == lasso({}, {0b10, 0b11}));
  CHECK(w.shifted().shifted() == lasso({}, {0b11, 0b10}));
  CHECK(kAB.letter_str(0b11) == "{a,b}");
  CHECK(kAB.letter_str(0) == "{}");
}
