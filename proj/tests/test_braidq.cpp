#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gts/braidq.hpp"
#include "oracle/artin.hpp"

using namespace gts;

namespace {

const int kPairs[6][2] = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 4}};

std::string xname(int i, int j) { return "x" + std::to_string(i) + std::to_string(j); }

// standard pure braid presentation, one relation per ordered pair of generators
std::optional<Word> relation_rhs(const Alphabet& A, int r, int s, int i, int j) {
  auto X = [&](int a, int b) { return Word::gen(A, xname(a, b)); };
  Word xij = X(i, j);
  if (s < i || (i < r && r < s && s < j)) return xij;
  if (s == i) return X(r, j) * xij * X(r, j).inverse();
  if (r == i && s < j) return X(r, j) * X(s, j) * xij * X(s, j).inverse() * X(r, j).inverse();
  if (r < i && i < s && s < j)
    return X(r, j) * X(s, j) * X(r, j).inverse() * X(s, j).inverse() * xij * X(s, j) * X(r, j) * X(s, j).inverse() * X(r, j).inverse();
  return std::nullopt;
}

}  // namespace

TEST_CASE("oracle: sigma words of x_ij and braid relations") {
  const Alphabet& B4 = alphabets::B4();
  for (auto& p : kPairs) CHECK(oracle::equal(x_as_sigma_word(p[0], p[1], B4), Word::gen(B4, xname(p[0], p[1])), 4));
  CHECK(oracle::equal(Word::parse(B4, "s1 s2 s1"), Word::parse(B4, "s2 s1 s2"), 4));
  CHECK(oracle::equal(Word::parse(B4, "s1 s3"), Word::parse(B4, "s3 s1"), 4));
  CHECK(!oracle::equal(Word::parse(B4, "s1 s2"), Word::parse(B4, "s2 s1"), 4));
}

TEST_CASE("oracle: conjugation rules in B4") {
  const Alphabet& B4 = alphabets::B4();
  int checked = 0;
  for (int k = 1; k <= 3; ++k)
    for (int sign : {-1, 1})
      for (auto& p : kPairs) {
        std::string x = xname(p[0], p[1]);
        std::string sk = "s" + std::to_string(k);
        Word lhs = Word::gen(B4, sk, sign) * Word::gen(B4, x) * Word::gen(B4, sk, -sign);
        Word rhs = conjugation_rule(k, sign, x, B4);
        CHECK_MESSAGE(oracle::equal(lhs, rhs, 4), "k=" << k << " sign=" << sign << " " << x);
        ++checked;
      }
  CHECK(checked == 36);
}

TEST_CASE("oracle: conjugation rules in B3 including c") {
  const Alphabet& B3 = alphabets::B3();
  for (int k = 1; k <= 2; ++k)
    for (int sign : {-1, 1})
      for (const char* x : {"x12", "x23", "x13", "c"}) {
        std::string sk = "s" + std::to_string(k);
        Word lhs = Word::gen(B3, sk, sign) * Word::gen(B3, x) * Word::gen(B3, sk, -sign);
        CHECK(oracle::equal(lhs, conjugation_rule(k, sign, x, B3), 3));
      }
  CHECK(oracle::equal(Word::gen(B3, "c"), Word::parse(B3, "x12 x13 x23"), 3));
  // the three identities of the appendix, verbatim
  CHECK(oracle::equal(Word::parse(B3, "s1^-1 x23 s1"), Word::parse(B3, "x13"), 3));
  CHECK(oracle::equal(Word::parse(B3, "s2^-1 x12 s2"), Word::parse(B3, "x23^-1 x12^-1 c"), 3));
  CHECK(oracle::equal(Word::parse(B3, "s2^-1 x13 s2"), Word::parse(B3, "x12"), 3));
}

TEST_CASE("oracle: pure braid relations") {
  const Alphabet& PB4 = alphabets::PB4();
  int instances = 0;
  for (auto& a : kPairs)
    for (auto& b : kPairs) {
      if (&a == &b) continue;
      auto rhs = relation_rhs(PB4, a[0], a[1], b[0], b[1]);
      if (!rhs) continue;
      Word lhs = Word::gen(PB4, xname(a[0], a[1]), -1) * Word::gen(PB4, xname(b[0], b[1])) * Word::gen(PB4, xname(a[0], a[1]));
      CHECK(oracle::equal(lhs, *rhs, 4));
      ++instances;
    }
  // one instance per unordered pair, except the four pairs sharing a right endpoint
  CHECK(instances == 11);
}

TEST_CASE("oracle: strand maps are homomorphisms with the expected images") {
  const Alphabet& PB3 = alphabets::PB3();
  const Alphabet& PB4 = alphabets::PB4();
  // c is central in PB3, so its image must commute with every generator image
  for (const char* phi : {"123", "12_3_4", "1_23_4", "1_2_34", "234"}) {
    Word c = phi_substitute(phi, Word::gen(PB3, "c"));
    CHECK(oracle::equal(c, phi_substitute(phi, Word::parse(PB3, "x12 x13 x23")), 4));
    for (const char* x : {"x12", "x23", "x13"}) {
      Word g = phi_substitute(phi, Word::gen(PB3, x));
      CHECK(oracle::equal(c * g, g * c, 4));
    }
  }
  // strand-doubling images agree with cabling in the Artin model
  CHECK(oracle::equal(phi_substitute("234", Word::gen(PB3, "x12")), Word::gen(PB4, "x23"), 4));
  CHECK(oracle::equal(phi_substitute("123", Word::gen(PB3, "x13")), Word::gen(PB4, "x13"), 4));
  // x12 x13 x23 in PB3 maps under 12_3_4 to the full twist of the first three strands
  CHECK(oracle::equal(phi_substitute("12_3_4", Word::parse(PB3, "x12")), Word::parse(PB4, "x13 x23"), 4));
  for (const char* phi : {"12", "23", "12_3", "1_23"}) CHECK_NOTHROW(phi_substitute(phi, Word::gen(alphabets::PB2(), "x12")));
  CHECK_THROWS_AS(phi_substitute("nope", Word::gen(PB3, "x12")), WordError);
}

TEST_CASE("fixtures satisfy the pure braid relations") {
  for (const auto& name : testutil::fixture_names()) {
    auto spec = load_spec(testutil::fixture(name));
    CHECK_MESSAGE(validate_spec(spec).empty(), name);
  }
  auto bad = load_spec(testutil::fixture("philadelphia.spec"));
  bad.images[0] = parse_cycles("(1,2)", 9);
  CHECK(!validate_spec(bad).empty());
  CHECK_THROWS_AS(Quotients::build(bad), SpecError);
}

TEST_CASE("spec text round trip and errors") {
  auto spec = load_spec(testutil::fixture("philadelphia.spec"));
  auto again = parse_spec(write_spec(spec));
  CHECK(again.name == spec.name);
  CHECK(again.images == spec.images);
  CHECK_THROWS_AS(parse_spec("name: a\ndegree: 3\nx12: ()\n"), SpecError);
  CHECK_THROWS(parse_spec("name: a\ndegree: 2\nx12: (1,3)\nx23: ()\nx13: ()\nx14: ()\nx24: ()\nx34: ()\n"));
}

TEST_CASE("N_ord characterizations agree on every fixture") {
  for (const auto& name : testutil::fixture_names()) {
    auto Q = testutil::load_q(name);
    auto c = Q->n_ord_characterizations();
    CHECK_MESSAGE((c[0] == c[1] && c[1] == c[2] && c[2] == c[3] && c[0] == Q->n_ord()), name);
  }
}

TEST_CASE("known quotient sizes") {
  auto P = testutil::load_q("philadelphia.spec");
  CHECK(P->order_q4() == 216);
  CHECK(P->order_qf2() == 7776);
  CHECK(P->n_ord() == 6);
  auto T = testutil::load_q("trivial.spec");
  CHECK(T->order_q4() == 1);
  CHECK(T->n_ord() == 1);
  for (uint32_t q = 2; q <= 8; ++q) {
    auto A = Quotients::build(make_cyclic_spec(q));
    CHECK(A->order_q4() == q);
    CHECK(A->n_ord() == q);
  }
}

TEST_CASE("conjugation identities hold in every fixture's braid quotients") {
  const Alphabet& B4 = alphabets::B4();
  const Alphabet& B3 = alphabets::B3();
  for (const auto& name : testutil::fixture_names()) {
    auto Q = testutil::load_q(name);
    for (int k = 1; k <= 3; ++k)
      for (int sign : {-1, 1})
        for (auto& p : kPairs) {
          std::string x = xname(p[0], p[1]), sk = "s" + std::to_string(k);
          Word lhs = Word::gen(B4, sk, sign) * Word::gen(B4, x) * Word::gen(B4, sk, -sign);
          CHECK(Q->b4().eval(lhs) == Q->b4().eval(conjugation_rule(k, sign, x, B4)));
        }
    for (auto& p : kPairs) CHECK(Q->b4().eval(x_as_sigma_word(p[0], p[1], B4)) == Q->b4().eval(Word::gen(B4, xname(p[0], p[1]))));
    CHECK(Q->b3().eval(Word::parse(B3, "s1^-1 x23 s1")) == Q->b3().eval(Word::parse(B3, "x13")));
    CHECK(Q->b3().eval(Word::parse(B3, "s2^-1 x12 s2")) == Q->b3().eval(Word::parse(B3, "x23^-1 x12^-1 c")));
    CHECK(Q->b3().eval(Word::parse(B3, "s2^-1 x13 s2")) == Q->b3().eval(Word::parse(B3, "x12")));
    CHECK(Q->b3().eval(Word::parse(B3, "s1 s2 s1 s2 s1 s2")) == Q->b3().eval(Word::gen(B3, "c")));
  }
}

TEST_CASE("normality probe: kernel words stay in the kernel under sigma conjugation") {
  const Alphabet& PB4 = alphabets::PB4();
  const Alphabet& B4 = alphabets::B4();
  std::mt19937_64 rng(2024);
  for (const char* name : {"philadelphia.spec", "mighty_dandy.spec", "ab6.spec"}) {
    auto Q = testutil::load_q(name);
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
      Word w = testutil::random_word(rng, PB4, 6);
      Word k = w.pow(static_cast<int64_t>(Q->eval_pure4(w).order()));
      REQUIRE(Q->eval_pure4(k).is_identity());
      std::vector<Word> b4x;
      for (const char* x : kPB4Names) b4x.push_back(Word::gen(B4, x));
      Word kb = substitute(k, b4x);
      for (auto [s, sign] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, -1}}) {
        std::string sk = "s" + std::to_string(s);
        Word conj = Word::gen(B4, sk, sign) * kb * Word::gen(B4, sk, -sign);
        BraidCoset c = eval_braid(*Q, 4, conj);
        if (!c.theta.is_identity() || !c.pure.is_identity()) ++failures;
      }
    }
    CHECK_MESSAGE(failures == 0, name);
  }
}

TEST_CASE("induced model is consistent with the quotient maps") {
  auto Q = testutil::load_q("philadelphia.spec");
  const Alphabet& B3 = alphabets::B3();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    Word w = testutil::random_word(rng, alphabets::PB3(), 8);
    std::vector<Word> img;
    for (const char* x : {"x12", "x23", "x13", "c"}) img.push_back(Word::gen(B3, x));
    Perm g = Q->b3().eval(substitute(w, img));
    CHECK(Q->b3().theta_of(g).is_identity());
    CHECK(Q->b3().pure_of(g) == Q->eval_pure3_flat(w));
  }
}
