#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gts/words.hpp"

using namespace gts;

TEST_CASE("parse, reduce and print") {
  const Alphabet& F = alphabets::F2();
  CHECK(Word::parse(F, "x^2 y^-1").to_string() == "x^2 y^-1");
  CHECK(Word::parse(F, "x*x*y").to_string() == "x^2 y");
  CHECK(Word::parse(F, "x y y^-1 x^-1").empty());
  CHECK(Word::parse(F, "e").to_string() == "e");
  CHECK(Word::parse(F, "1").empty());
  CHECK(Word::parse(F, "x12 x23") == Word::parse(F, "x y"));
  CHECK_THROWS_AS(Word::parse(F, "z"), WordError);
  CHECK_THROWS_AS(Word::parse(F, "x^"), WordError);
  CHECK(Word::parse(alphabets::B4(), "s1^2 x34^-1").to_string() == "s1^2 x34^-1");
}

TEST_CASE("group operations on words") {
  const Alphabet& F = alphabets::F2();
  Word a = Word::parse(F, "x y^2"), b = Word::parse(F, "y x^-1");
  CHECK((a * a.inverse()).empty());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-1) == a.inverse());
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK(exponent_sum(a, "y") == 2);
  CHECK(exponent_sum(commutator(a, b), "x") == 0);
  CHECK(a.length() == 3);
}

TEST_CASE("substitution is a homomorphism") {
  const Alphabet& F = alphabets::F2();
  std::mt19937_64 rng(11);
  std::vector<Word> img{Word::parse(F, "x y"), Word::parse(F, "y^-1 x^3")};
  for (int t = 0; t < 50; ++t) {
    Word u = testutil::random_word(rng, F, 8), v = testutil::random_word(rng, F, 8);
    CHECK(substitute(u * v, img) == substitute(u, img) * substitute(v, img));
    CHECK(substitute(u.inverse(), img) == substitute(u, img).inverse());
  }
  std::map<std::string, Word> named{{"x", Word::parse(F, "y")}};
  CHECK_THROWS(substitute(Word::parse(F, "x y"), named));
}

TEST_CASE("evaluation agrees with substitution followed by evaluation") {
  const Alphabet& F = alphabets::F2();
  std::mt19937_64 rng(5);
  auto pw = [](const Perm& p, int64_t e) { return p.pow(e); };
  for (int t = 0; t < 30; ++t) {
    std::vector<Perm> g{testutil::random_perm(rng, 7), testutil::random_perm(rng, 7)};
    std::vector<Word> img{testutil::random_word(rng, F, 4), testutil::random_word(rng, F, 4)};
    Word w = testutil::random_word(rng, F, 10);
    std::vector<Perm> composed{evaluate(img[0], g, Perm(7), pw), evaluate(img[1], g, Perm(7), pw)};
    CHECK(evaluate(substitute(w, img), g, Perm(7), pw) == evaluate(w, composed, Perm(7), pw));
  }
}
